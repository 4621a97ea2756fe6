#include "nilcomplete/freelie.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilc {

namespace {

constexpr int kMaxClass = 8;

size_t ipow(int r, int n) {
  size_t v = 1;
  while (n-- > 0) v *= static_cast<size_t>(r);
  return v;
}

}  // namespace

char letter_char(int i) {
  static const char letters[] = {'x', 'y', 'z', 'w'};
  if (i < 0 || i >= 4)
    throw std::invalid_argument("letter_char: only ranks up to 4 are printable");
  return letters[i];
}

void FreeWord::push(int g, int e) {
  if (!letters_.empty() && letters_.back().first == g &&
      letters_.back().second == -e) {
    letters_.pop_back();
  } else {
    letters_.emplace_back(g, e);
  }
}

FreeWord FreeWord::gen(int i, int exponent) {
  if (i < 0) throw std::invalid_argument("FreeWord::gen: negative index");
  FreeWord w;
  int e = exponent < 0 ? -1 : 1;
  for (int c = 0; c < std::abs(exponent); ++c) w.push(i, e);
  return w;
}

int FreeWord::max_generator() const {
  int m = -1;
  for (const auto& [g, e] : letters_) m = std::max(m, g);
  return m;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.push(it->first, -it->second);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord w = *this;
  for (const auto& [g, e] : o.letters_) w.push(g, e);
  return w;
}

FreeWord FreeWord::pow(long e) const {
  FreeWord base = e < 0 ? inverse() : *this;
  FreeWord w;
  for (long i = 0; i < std::abs(e); ++i) w = w * base;
  return w;
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

FreeWord FreeWord::left_normed(const std::vector<FreeWord>& ws) {
  if (ws.empty()) throw std::invalid_argument("left_normed: empty bracket");
  FreeWord acc = ws[0];
  for (size_t i = 1; i < ws.size(); ++i) acc = commutator(acc, ws[i]);
  return acc;
}

std::string FreeWord::str() const {
  std::string s;
  for (const auto& [g, e] : letters_) {
    s += letter_char(g);
    if (e < 0) s += '\'';
  }
  return s.empty() ? "1" : s;
}

MagnusSeries::MagnusSeries(int rank, int trunc_class)
    : rank_(rank), trunc_(trunc_class) {
  if (rank < 1) throw std::invalid_argument("MagnusSeries: rank must be >= 1");
  if (trunc_class < 1 || trunc_class > kMaxClass)
    throw std::invalid_argument("MagnusSeries: truncation class out of range (1..8)");
  coef_.resize(trunc_ + 1);
  for (int d = 0; d <= trunc_; ++d) coef_[d].resize(ipow(rank_, d));
}

MagnusSeries MagnusSeries::one(int rank, int trunc_class) {
  MagnusSeries s(rank, trunc_class);
  s.coef_[0][0] = 1;
  return s;
}

MagnusSeries MagnusSeries::generator_image(int i, int rank, int trunc_class) {
  MagnusSeries s = one(rank, trunc_class);
  if (i < 0 || i >= rank) throw std::invalid_argument("generator index out of range");
  if (trunc_class >= 1) s.coef_[1][i] = 1;
  return s;
}

MagnusSeries MagnusSeries::generator_inverse_image(int i, int rank, int trunc_class) {
  // (1 + X)^{-1} truncated: alternating powers of X.
  MagnusSeries s(rank, trunc_class);
  if (i < 0 || i >= rank) throw std::invalid_argument("generator index out of range");
  for (int d = 0; d <= trunc_class; ++d) {
    size_t idx = 0;
    for (int p = 0; p < d; ++p) idx = idx * rank + i;
    s.coef_[d][idx] = (d % 2 == 0) ? 1 : -1;
  }
  return s;
}

const mpz_class& MagnusSeries::coefficient(const std::vector<int>& word) const {
  int d = static_cast<int>(word.size());
  if (d > trunc_) throw std::invalid_argument("coefficient: degree beyond truncation");
  size_t idx = 0;
  for (int g : word) {
    if (g < 0 || g >= rank_) throw std::invalid_argument("coefficient: bad letter");
    idx = idx * rank_ + g;
  }
  return coef_[d][idx];
}

bool MagnusSeries::degree_is_zero(int d) const {
  return std::all_of(coef_[d].begin(), coef_[d].end(),
                     [](const mpz_class& c) { return c == 0; });
}

MagnusSeries MagnusSeries::operator*(const MagnusSeries& o) const {
  if (rank_ != o.rank_ || trunc_ != o.trunc_)
    throw std::invalid_argument("MagnusSeries: mismatched rings");
  MagnusSeries out(rank_, trunc_);
  for (int d1 = 0; d1 <= trunc_; ++d1)
    for (int d2 = 0; d1 + d2 <= trunc_; ++d2) {
      size_t shift = ipow(rank_, d2);
      for (size_t i = 0; i < coef_[d1].size(); ++i) {
        if (coef_[d1][i] == 0) continue;
        for (size_t j = 0; j < o.coef_[d2].size(); ++j) {
          if (o.coef_[d2][j] == 0) continue;
          out.coef_[d1 + d2][i * shift + j] += coef_[d1][i] * o.coef_[d2][j];
        }
      }
    }
  return out;
}

MagnusSeries magnus_embed(const FreeWord& w, int rank, int trunc_class) {
  if (w.max_generator() >= rank)
    throw std::invalid_argument("magnus_embed: generator index >= rank");
  MagnusSeries acc = MagnusSeries::one(rank, trunc_class);
  for (const auto& [g, e] : w.letters()) {
    acc = acc * (e > 0 ? MagnusSeries::generator_image(g, rank, trunc_class)
                       : MagnusSeries::generator_inverse_image(g, rank, trunc_class));
  }
  return acc;
}

std::optional<int> lcs_weight(const FreeWord& w, int trunc_class) {
  int rank = std::max(1, w.max_generator() + 1);
  MagnusSeries s = magnus_embed(w, rank, trunc_class);
  for (int d = 1; d <= trunc_class; ++d)
    if (!s.degree_is_zero(d)) return d;
  return std::nullopt;
}

bool LiePoly::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

namespace {

LiePoly normalized(LiePoly p) {
  for (auto it = p.coeff.begin(); it != p.coeff.end();)
    it = it->second == 0 ? p.coeff.erase(it) : std::next(it);
  return p;
}

}  // namespace

LiePoly LiePoly::operator+(const LiePoly& o) const {
  if (rank != o.rank || degree != o.degree)
    throw std::invalid_argument("LiePoly: mismatched components");
  LiePoly r = *this;
  for (const auto& [w, c] : o.coeff) r.coeff[w] += c;
  return normalized(r);
}

LiePoly LiePoly::operator-(const LiePoly& o) const { return *this + (-o); }

LiePoly LiePoly::operator-() const { return scaled(-1); }

LiePoly LiePoly::scaled(const mpz_class& c) const {
  LiePoly r(rank, degree);
  for (const auto& [w, v] : coeff) r.coeff[w] = c * v;
  return normalized(r);
}

bool LiePoly::operator==(const LiePoly& o) const {
  return rank == o.rank && degree == o.degree &&
         normalized(*this).coeff == normalized(o).coeff;
}

std::string LiePoly::str() const {
  std::string s;
  for (const auto& [w, c] : coeff) {
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*[" + w + "]";
  }
  return s.empty() ? "0" : s;
}

bool is_lyndon(const std::string& w) {
  size_t n = w.size();
  if (n == 0) return false;
  for (size_t i = 1; i < n; ++i) {
    // compare w with its rotation starting at i
    std::string rot = w.substr(i) + w.substr(0, i);
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<std::string> lyndon_words(int r, int n) {
  if (r < 1 || r > 4 || n < 1 || n > kMaxClass)
    throw std::invalid_argument("lyndon_words: out of supported range");
  std::vector<std::string> out;
  std::string w(n, letter_char(0));
  size_t total = ipow(r, n);
  for (size_t idx = 0; idx < total; ++idx) {
    size_t t = idx;
    for (int p = n - 1; p >= 0; --p) {
      w[p] = letter_char(static_cast<int>(t % r));
      t /= r;
    }
    if (is_lyndon(w)) out.push_back(w);
  }
  return out;
}

namespace {

int mobius(long d) {
  int mu = 1;
  for (long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      mu = -mu;
    }
  }
  if (d > 1) mu = -mu;
  return mu;
}

// Dense homogeneous degree-n polynomial in r noncommuting letters.
struct Homog {
  int r = 0, n = 0;
  std::vector<mpz_class> c;
  Homog() = default;
  Homog(int r_, int n_) : r(r_), n(n_), c(ipow(r_, n_)) {}
};

Homog concat_mul(const Homog& a, const Homog& b) {
  Homog out(a.r, a.n + b.n);
  size_t shift = ipow(a.r, b.n);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      out.c[i * shift + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

Homog bracket(const Homog& a, const Homog& b) {
  Homog ab = concat_mul(a, b);
  Homog ba = concat_mul(b, a);
  for (size_t i = 0; i < ab.c.size(); ++i) ab.c[i] -= ba.c[i];
  return ab;
}

int letter_index(char ch) {
  switch (ch) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 'w': return 3;
    default: throw std::invalid_argument("letter_index: unknown letter");
  }
}

Homog monomial(int r, const std::string& w) {
  Homog h(r, static_cast<int>(w.size()));
  size_t idx = 0;
  for (char ch : w) idx = idx * r + letter_index(ch);
  h.c[idx] = 1;
  return h;
}

std::string word_of_index(int r, int n, size_t idx) {
  std::string w(n, 'x');
  for (int p = n - 1; p >= 0; --p) {
    w[p] = letter_char(static_cast<int>(idx % r));
    idx /= r;
  }
  return w;
}

// Standard factorization of a Lyndon word: w = uv with v the lex-least
// (equivalently longest Lyndon) proper suffix.
std::pair<std::string, std::string> standard_factorization(const std::string& w) {
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (w.substr(i) < w.substr(best)) best = i;
  return {w.substr(0, best), w.substr(best)};
}

// Associative expansion of the standard Lyndon bracketing; leading (lex
// least) monomial is the word itself with coefficient 1.
const Homog& lyndon_expansion(int r, const std::string& w) {
  static thread_local std::map<std::pair<int, std::string>, Homog> memo;
  auto key = std::make_pair(r, w);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Homog h;
  if (w.size() == 1) {
    h = monomial(r, w);
  } else {
    auto [u, v] = standard_factorization(w);
    h = bracket(lyndon_expansion(r, u), lyndon_expansion(r, v));
  }
  return memo.emplace(key, std::move(h)).first->second;
}

// Triangular extraction of Lyndon-basis coordinates from a homogeneous
// Lie element.
LiePoly extract_lyndon(Homog h) {
  LiePoly out(h.r, h.n);
  for (size_t idx = 0; idx < h.c.size(); ++idx) {
    if (h.c[idx] == 0) continue;
    std::string w = word_of_index(h.r, h.n, idx);
    if (!is_lyndon(w))
      throw std::domain_error("extract_lyndon: component is not a Lie element");
    mpz_class c = h.c[idx];
    const Homog& exp = lyndon_expansion(h.r, w);
    for (size_t j = idx; j < h.c.size(); ++j) h.c[j] -= c * exp.c[j];
    out.coeff[w] = c;
  }
  return out;
}

}  // namespace

long witt_rank(int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("witt_rank: bad arguments");
  mpz_class sum = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(r),
                  static_cast<unsigned long>(n / d));
    sum += mobius(d) * term;
  }
  mpz_class q = sum / n;
  return q.get_si();
}

LiePoly graded_image(const FreeWord& w, int n, int r) {
  if (n < 1 || n > kMaxClass)
    throw std::invalid_argument("graded_image: degree out of range");
  if (w.max_generator() >= r)
    throw std::invalid_argument("graded_image: generator index >= rank");
  MagnusSeries s = magnus_embed(w, r, n);
  for (int d = 1; d < n; ++d)
    if (!s.degree_is_zero(d))
      throw std::invalid_argument("graded_image: word has weight < n");
  Homog h(r, n);
  h.c = s.degree_slice(n);
  return extract_lyndon(std::move(h));
}

LiePoly left_normed_bracket(const std::vector<int>& letters, int r) {
  if (letters.empty()) throw std::invalid_argument("left_normed_bracket: empty");
  Homog acc = monomial(r, std::string(1, letter_char(letters[0])));
  for (size_t i = 1; i < letters.size(); ++i)
    acc = bracket(acc, monomial(r, std::string(1, letter_char(letters[i]))));
  return extract_lyndon(std::move(acc));
}

FreeWord lyndon_bracket_word(const std::string& word) {
  if (word.size() == 1) return FreeWord::gen(letter_index(word[0]));
  auto [u, v] = standard_factorization(word);
  return FreeWord::commutator(lyndon_bracket_word(u), lyndon_bracket_word(v));
}

namespace {

// Apply the linear substitution X_i -> sum_j a[j][i] X_j to every tensor leg.
Homog substitute(const Homog& h, const IntMatrix& a) {
  int r = h.r;
  Homog cur = h;
  for (int leg = 0; leg < h.n; ++leg) {
    Homog next(r, h.n);
    size_t stride = ipow(r, h.n - 1 - leg);
    for (size_t idx = 0; idx < cur.c.size(); ++idx) {
      if (cur.c[idx] == 0) continue;
      int digit = static_cast<int>((idx / stride) % r);
      size_t base = idx - static_cast<size_t>(digit) * stride;
      for (int j = 0; j < r; ++j) {
        if (a.at(j, digit) == 0) continue;
        next.c[base + static_cast<size_t>(j) * stride] += a.at(j, digit) * cur.c[idx];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

IntMatrix lie_functor_matrix(const IntMatrix& a, int n) {
  if (!a.is_square()) throw std::invalid_argument("lie_functor_matrix: not square");
  int r = a.rows();
  std::vector<std::string> basis = lyndon_words(r, n);
  std::map<std::string, int> pos;
  for (size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<int>(i);

  IntMatrix m(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t col = 0; col < basis.size(); ++col) {
    Homog image = substitute(lyndon_expansion(r, basis[col]), a);
    LiePoly p = extract_lyndon(std::move(image));
    for (const auto& [w, c] : p.coeff) m.at(pos.at(w), static_cast<int>(col)) = c;
  }
  return m;
}

IntMatrix lie_functor_matrix_in_basis(const IntMatrix& a, int n,
                                      const std::vector<LiePoly>& basis) {
  int r = a.rows();
  std::vector<std::string> lw = lyndon_words(r, n);
  if (basis.size() != lw.size())
    throw std::domain_error("lie_functor_matrix_in_basis: wrong basis size");
  std::map<std::string, int> pos;
  for (size_t i = 0; i < lw.size(); ++i) pos[lw[i]] = static_cast<int>(i);

  IntMatrix t(static_cast<int>(lw.size()), static_cast<int>(lw.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (const auto& [w, c] : basis[j].coeff) t.at(pos.at(w), static_cast<int>(j)) = c;

  IntMatrix m = lie_functor_matrix(a, n);
  std::optional<IntMatrix> x = solve_exact(t, m * t);
  if (!x || t * *x != m * t)
    throw std::domain_error("lie_functor_matrix_in_basis: family is not a Z-basis");
  return *x;
}

}  // namespace nilc
