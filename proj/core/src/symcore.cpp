#include "jackcbe/symcore.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace jackcbe {

namespace {

// Beta-set (first-column hook lengths) of lambda padded to `len` rows.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) b[i] = lambda[i] + (len - 1 - i);
  return b;
}

Partition from_beta_set(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int len = static_cast<int>(b.size());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = b[i] - (len - 1 - i);
  return Partition(std::move(parts));
}

long long character_rec(const Partition& lambda, const Partition& mu,
                        std::map<std::pair<Partition, Partition>, long long>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  const auto key = std::make_pair(lambda, mu);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu.parts().front();
  const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  const int len = lambda.length();
  const auto b = beta_set(lambda, len);

  long long total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = b[i] - r;
    if (target < 0) continue;
    if (std::find(b.begin(), b.end(), target) != b.end()) continue;
    // Sign is (-1)^(height of the rim hook) = (-1)^(beads strictly between).
    int between = 0;
    for (int v : b)
      if (v > target && v < b[i]) ++between;
    auto moved = b;
    moved[i] = target;
    const long long sub = character_rec(from_beta_set(std::move(moved)), rest, memo);
    total += (between % 2 ? -sub : sub);
  }
  memo.emplace(key, total);
  return total;
}

std::mutex& character_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("character: weights of " + lambda.str() + " and " + mu.str() + " differ");
  static std::map<std::pair<Partition, Partition>, long long> memo;
  std::lock_guard lock(character_mutex());
  return character_rec(lambda, mu, memo);
}

SymPoly schur_in_powersums(const Partition& lambda) {
  SymPoly::Terms terms;
  for (const auto& mu : enumerate_partitions(lambda.weight())) {
    const long long chi = character(lambda, mu);
    if (chi == 0) continue;
    Rational c(mpz_class(static_cast<long>(chi)), z_lambda(mu));
    c.canonicalize();
    terms.emplace(mu, std::move(c));
  }
  return SymPoly(std::move(terms));
}

JackTable::JackTable(AlphaParam alpha, int max_degree, TieBreak tie) : alpha_(std::move(alpha)) {
  if (max_degree < 0) throw std::invalid_argument("JackTable: max_degree must be nonnegative");
  blocks_.reserve(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) {
    Block block;
    block.degree = k;
    block.basis = enumerate_partitions(k);
    std::map<Partition, std::size_t> position;
    for (std::size_t i = 0; i < block.basis.size(); ++i) position.emplace(block.basis[i], i);

    for (const auto& lambda : dominance_linear_extension(block.basis, tie)) {
      const SymPoly schur = schur_in_powersums(lambda);
      SymPoly j = schur;
      for (const auto& prev : block.entries)
        j.add_scaled(prev.jack, -inner_product_alpha(schur, prev.jack, alpha_) / prev.norm);
      Rational norm = inner_product_alpha(j, j, alpha_);
      if (norm == 0)
        throw std::runtime_error("JackTable: Gram-Schmidt pivot vanished at alpha = " + alpha_.str() +
                                 " for lambda = " + lambda.str());

      Entry e;
      e.lambda = lambda;
      e.coeffs.assign(block.basis.size(), 0.0);
      for (const auto& [mu, c] : j.terms()) e.coeffs[position.at(mu)] = c.get_d();
      e.jack = std::move(j);
      e.norm = std::move(norm);
      e.norm_d = e.norm.get_d();
      block.entries.push_back(std::move(e));
    }
    blocks_.push_back(std::move(block));
  }
}

const JackTable::Block& JackTable::block(int degree) const {
  if (degree < 0 || degree > max_degree())
    throw std::out_of_range("JackTable: degree " + std::to_string(degree) + " outside table (max " +
                            std::to_string(max_degree()) + ")");
  return blocks_[degree];
}

const JackTable::Entry& JackTable::entry(const Partition& lambda) const {
  const auto& b = block(lambda.weight());
  for (const auto& e : b.entries)
    if (e.lambda == lambda) return e;
  throw std::logic_error("JackTable: missing entry " + lambda.str());
}

std::vector<Complex> JackTable::evaluate(int degree, const Specialization& rho) const {
  const auto& b = block(degree);
  std::vector<Complex> pvals(b.basis.size());
  for (std::size_t i = 0; i < b.basis.size(); ++i) pvals[i] = rho.evaluate(b.basis[i]);
  std::vector<Complex> out(b.entries.size());
  for (std::size_t e = 0; e < b.entries.size(); ++e) {
    Complex s(0.0, 0.0);
    const auto& c = b.entries[e].coeffs;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0.0) s += c[i] * pvals[i];
    out[e] = s;
  }
  return out;
}

std::shared_ptr<const JackTable> shared_jack_table(const AlphaParam& alpha, int max_degree) {
  static std::mutex m;
  static std::unordered_map<std::string, std::shared_ptr<const JackTable>> cache;
  const std::string key = alpha.str();
  {
    std::lock_guard lock(m);
    const auto it = cache.find(key);
    if (it != cache.end() && it->second->max_degree() >= max_degree) return it->second;
  }
  auto table = std::make_shared<const JackTable>(alpha, max_degree);
  std::lock_guard lock(m);
  auto& slot = cache[key];
  if (!slot || slot->max_degree() < max_degree) slot = table;
  return slot;
}

SymPoly jack_in_powersums(const Partition& lambda, const AlphaParam& alpha) {
  return shared_jack_table(alpha, lambda.weight())->jack(lambda);
}

Rational jack_norm(const Partition& lambda, const AlphaParam& alpha) {
  return shared_jack_table(alpha, lambda.weight())->norm(lambda);
}

std::vector<std::pair<Partition, Rational>> schur_coefficients(const SymPoly& p, int degree) {
  const AlphaParam one(1);
  std::vector<std::pair<Partition, Rational>> out;
  for (const auto& mu : enumerate_partitions(degree))
    out.emplace_back(mu, inner_product_alpha(p, schur_in_powersums(mu), one));
  return out;
}

std::pair<Rational, Rational> hook_products(const Partition& lambda, const Rational& theta) {
  if (theta <= 0) throw std::invalid_argument("hook_products: theta must be positive");
  const Partition conj = lambda.conjugate();
  Rational h(1), hp(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      const int arm = lambda[i - 1] - j;
      const int leg = conj[j - 1] - i;
      h *= Rational(arm) + Rational(leg) * theta + 1;
      hp *= Rational(arm) + Rational(leg) * theta + theta;
    }
  return {h, hp};
}

Rational a_coefficient(const Partition& lambda, const AlphaParam& alpha, int n) {
  if (n < 1) throw std::invalid_argument("a_coefficient: n must be positive");
  if (lambda.length() > n)
    throw std::invalid_argument("a_coefficient: l(" + lambda.str() + ") exceeds n = " + std::to_string(n));
  const Rational& a = alpha.value();
  Rational prod(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) prod *= 1 - (a - 1) / (Rational(n) + j * a - i);
  return prod;
}

}  // namespace jackcbe
