#include "jackcbe/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jackcbe {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("Partition: parts must be positive (zeros only trailing)");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    weight_ += parts[i];
  }
  parts_ = std::move(parts);
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      token.push_back(ch);
    } else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
      if (!token.empty()) parts.push_back(std::stoi(token));
      token.clear();
    } else {
      throw std::invalid_argument("Partition::parse: unexpected character in '" + text + "'");
    }
  }
  if (!token.empty()) parts.push_back(std::stoi(token));
  return Partition(std::move(parts));
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

mpz_class partition_count(int n) {
  if (n < 0) return 0;
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const int sign = (k % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

Dominance dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight())
    throw std::invalid_argument("dominance_leq: partitions " + mu.str() + " and " + nu.str() +
                                " have different weights");
  const std::size_t len = std::max(mu.parts().size(), nu.parts().size());
  bool mu_below = true;  // all partial sums of mu <= those of nu
  bool nu_below = true;
  int smu = 0, snu = 0;
  for (std::size_t k = 0; k < len; ++k) {
    smu += mu[k];
    snu += nu[k];
    if (smu > snu) mu_below = false;
    if (snu > smu) nu_below = false;
  }
  if (mu_below) return Dominance::LessOrEqual;
  if (nu_below) return Dominance::Greater;
  return Dominance::Incomparable;
}

bool strictly_dominated(const Partition& mu, const Partition& nu) {
  return mu != nu && dominance_leq(mu, nu) == Dominance::LessOrEqual;
}

mpz_class z_lambda(const Partition& lambda) {
  mpz_class z = 1;
  const auto& parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto m = static_cast<unsigned long>(j - i);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), m);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    z *= fact * power;
    i = j;
  }
  return z;
}

std::vector<Partition> dominance_linear_extension(std::vector<Partition> parts, TieBreak tie) {
  // Kahn's algorithm on the strict dominance relation.
  const std::size_t n = parts.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && strictly_dominated(parts[a], parts[b])) {
        above[a].push_back(b);
        ++indegree[b];
      }

  std::vector<Partition> order;
  order.reserve(n);
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (done[c] || indegree[c] != 0) continue;
      if (pick == n) {
        pick = c;
        continue;
      }
      const bool better =
          tie == TieBreak::ReverseLex ? parts[c] > parts[pick] : parts[c] < parts[pick];
      if (better) pick = c;
    }
    if (pick == n) throw std::logic_error("dominance_linear_extension: cycle in dominance order");
    done[pick] = true;
    order.push_back(parts[pick]);
    for (std::size_t b : above[pick]) --indegree[b];
  }
  return order;
}

}  // namespace jackcbe
