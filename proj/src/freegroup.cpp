#include "relgroup/freegroup.hpp"

#include <charconv>
#include <sstream>

#include "relgroup/error.hpp"

namespace relgroup {

namespace {

void require_same_alphabet(AlphabetPtr const& a, AlphabetPtr const& b, char const* op) {
  if (a != b && !(*a == *b))
    throw DimensionError(std::string(op) + ": words over different alphabets");
}

// Appends `l` to a reduced word, cancelling against its last letter.
void push_reduced(std::vector<Letter>& word, Letter l) {
  if (!word.empty() && word.back() == l.inverse())
    word.pop_back();
  else
    word.push_back(l);
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (names_[a].empty() || names_[a].find_first_of(" \t\n^") != std::string::npos)
      throw InvariantError("alphabet: invalid generator name '" + names_[a] + "'");
    for (std::size_t b = 0; b < a; ++b)
      if (names_[a] == names_[b])
        throw InvariantError("alphabet: duplicate generator '" + names_[a] + "'");
  }
}

std::size_t Alphabet::index(std::string_view name) const {
  for (std::size_t g = 0; g < names_.size(); ++g)
    if (names_[g] == name) return g;
  throw PreconditionError("unknown generator '" + std::string(name) + "'");
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<Alphabet const>(std::move(names));
}

ReducedWord::ReducedWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

ReducedWord::ReducedWord(AlphabetPtr alphabet, std::vector<Letter> const& letters)
    : alphabet_(std::move(alphabet)) {
  for (Letter l : letters) {
    if (l.generator >= alphabet_->size())
      throw InvariantError("word: generator index out of range");
    push_reduced(letters_, l);
  }
}

ReducedWord ReducedWord::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto const caret = token.find('^');
    std::string const name = token.substr(0, caret);
    long long exponent = 1;
    if (caret != std::string::npos) {
      std::string const digits = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw PreconditionError("word: bad exponent in token '" + token + "'");
    }
    auto const g = static_cast<std::uint32_t>(alphabet->index(name));
    Letter const l{g, exponent < 0};
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
      letters.push_back(l);
  }
  return ReducedWord(std::move(alphabet), letters);
}

ReducedWord ReducedWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = l.inverse();
  return ReducedWord(alphabet_, out);
}

std::string ReducedWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += alphabet_->name(letters_[k].generator);
    if (letters_[k].inverted) out += "^-1";
  }
  return out;
}

bool ReducedWord::operator==(ReducedWord const& other) const {
  return (alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_) &&
         letters_ == other.letters_;
}

bool ReducedWord::operator<(ReducedWord const& other) const {
  return letters_ < other.letters_;
}

ReducedWord word_multiply(ReducedWord const& u, ReducedWord const& v) {
  require_same_alphabet(u.alphabet(), v.alphabet(), "word_multiply");
  std::vector<Letter> out = u.letters();
  for (Letter l : v.letters()) push_reduced(out, l);
  return ReducedWord(u.alphabet(), out);
}

ReducedWord double_coset_normal(ReducedWord const& w, std::size_t h) {
  if (h >= w.alphabet()->size())
    throw PreconditionError("double_coset_normal: generator index out of range");
  auto const& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (lo < hi && l[lo].generator == h) ++lo;
  while (hi > lo && l[hi - 1].generator == h) --hi;
  return ReducedWord(w.alphabet(), std::vector<Letter>(l.begin() + lo, l.begin() + hi));
}

DoubleCosetUnion::DoubleCosetUnion(AlphabetPtr alphabet, std::size_t h)
    : alphabet_(std::move(alphabet)), h_(h) {
  if (h_ >= alphabet_->size())
    throw PreconditionError("DoubleCosetUnion: generator index out of range");
}

DoubleCosetUnion& DoubleCosetUnion::add(ReducedWord const& representative) {
  require_same_alphabet(alphabet_, representative.alphabet(), "DoubleCosetUnion::add");
  forms_.insert(double_coset_normal(representative, h_));
  return *this;
}

bool DoubleCosetUnion::contains(ReducedWord const& w) const {
  require_same_alphabet(alphabet_, w.alphabet(), "DoubleCosetUnion::contains");
  return forms_.contains(double_coset_normal(w, h_));
}

bool DoubleCosetUnion::contains_subgroup() const {
  return forms_.contains(ReducedWord(alphabet_));
}

DoubleCosetUnion intersect(DoubleCosetUnion const& a, DoubleCosetUnion const& b) {
  require_same_alphabet(a.alphabet_, b.alphabet_, "intersect");
  if (a.h_ != b.h_) throw DimensionError("intersect: double cosets of different subgroups");
  DoubleCosetUnion out(a.alphabet_, a.h_);
  for (auto const& f : a.forms_)
    if (b.forms_.contains(f)) out.forms_.insert(f);
  return out;
}

ScenarioReport verify_counterexample() {
  auto const abc = make_alphabet({"x", "y", "z"});
  std::size_t const x = abc->index("x");
  auto word = [&](std::string_view text) { return ReducedWord::parse(abc, text); };
  auto normal = [&](ReducedWord const& w) { return double_coset_normal(w, x); };
  auto show = [&](ReducedWord const& w) {
    return w.is_identity() ? std::string("H") : "H " + w.to_string() + " H";
  };

  ReducedWord const identity(abc);
  ReducedWord const y = word("y");
  ReducedWord const z = word("z");
  ReducedWord const zy = word("z y");
  ReducedWord const twisted = word("z^-1 x z y");

  DoubleCosetUnion s(abc, x);
  s.add(identity).add(y);
  DoubleCosetUnion t(abc, x);
  t.add(identity).add(twisted);

  // The target pair (HzH, HzyH), by normal forms.
  ReducedWord const left = normal(z);
  ReducedWord const right = normal(zy);

  ScenarioReport report;
  report.scenario = "free-counterexample";
  report.params = {{"alphabet", {"x", "y", "z"}}, {"subgroup", "<x>"},
                   {"S", "H u HyH"}, {"T", "H u H z^-1 x z y H"}};

  auto witness = [&](ReducedWord const& g, ReducedWord const& member,
                     DoubleCosetUnion const& set) {
    bool const in_set = set.contains(member);
    ReducedWord const gs = word_multiply(g, member);
    bool const hits = normal(g) == left && normal(gs) == right;
    return std::pair{in_set && hits, show(normal(g)) + " , " + show(normal(gs))};
  };

  auto [a_ok, a_pair] = witness(z, y, s);
  report.record("image of S contains (HzH, HzyH) via g=z, s=y", "double-coset.intersection",
                "H z H , H z y H", a_pair, a_ok);

  auto [b_ok, b_pair] = witness(z, twisted, t);
  report.record("image of T contains (HzH, HzyH) via g=z, s=z^-1 x z y",
                "double-coset.intersection", "H z H , H z y H", b_pair, b_ok);

  DoubleCosetUnion const meet = intersect(s, t);
  nlohmann::json meet_forms = nlohmann::json::array();
  for (auto const& f : meet.normal_forms()) meet_forms.push_back(show(f));
  bool const c_ok = meet.normal_forms().size() == 1 && meet.contains_subgroup() &&
                    !normal(y).is_identity() && !normal(twisted).is_identity() &&
                    normal(y) != normal(twisted);
  report.record("S n T = H", "double-coset.intersection", nlohmann::json::array({"H"}),
                meet_forms, c_ok);

  // The image of H is {(HgH, HghH)} = {(HgH, HgH)}: every pair is diagonal.
  bool diagonal = true;
  for (auto const* g : {"z", "z y", "y x z", "z^-1 x z y", "y^-1 z^2"}) {
    for (int k = -2; k <= 2; ++k) {
      ReducedWord const hk = word("x^" + std::to_string(k));
      diagonal = diagonal && normal(word(g)) == normal(word_multiply(word(g), hk));
    }
  }
  bool const d_ok = diagonal && left != right;
  report.record("image of S n T = H omits (HzH, HzyH)", "double-coset.intersection",
                "components differ", left != right ? "components differ" : "components equal",
                d_ok);
  return report;
}

}  // namespace relgroup
