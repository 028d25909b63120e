#include "catalg/enumeration.hpp"

#include <stdexcept>

#include "catalg/errors.hpp"

namespace catalg {

BigInt binomial(long a, long b) {
  if (a == -1 && b == -1) return 1;
  if (b < 0 || a < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

LatticePath::LatticePath(std::vector<int> steps) : steps_(std::move(steps)) {
  const int n = static_cast<int>(steps_.size());
  int prev = 1;
  for (int p : steps_) {
    if (p < prev || p > n + 1) {
      throw std::invalid_argument("lattice path steps must be non-decreasing within [1, n+1]");
    }
    prev = p;
  }
}

bool LatticePath::below(const LatticePath& other) const {
  if (length() != other.length()) return false;
  for (std::size_t i = 0; i < length(); ++i) {
    if (steps_[i] > other.steps_[i]) return false;
  }
  return true;
}

BoundaryData bar_path(int n, const SubsetOfN& b) {
  if (b.n() != n) throw std::invalid_argument("boundary set has wrong ambient size");
  std::vector<int> steps;
  steps.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    steps.push_back(i == 1 ? 1 : steps.back() + (b.contains(i) ? 1 : 0));
  }
  return {b, LatticePath(std::move(steps))};
}

ExactMatrix path_matrix(const LatticePath& x) {
  const std::size_t n = x.length();
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = binomial(x[i], static_cast<long>(j) - static_cast<long>(i) + 1);
    }
  }
  return m;
}

BigInt paths_below_det(const LatticePath& x) { return path_matrix(x).determinant(); }

BigInt paths_below_dp(const LatticePath& x) {
  if (x.length() == 0) return 1;
  const std::size_t top = static_cast<std::size_t>(x.length()) + 1;
  // ways[v] = number of valid prefixes whose last step has height v.
  std::vector<BigInt> ways(top + 1, 0);
  for (int v = 1; v <= x[0]; ++v) ways[static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 1; i < x.length(); ++i) {
    BigInt running = 0;
    for (std::size_t v = 1; v <= top; ++v) {
      running += ways[v];
      ways[v] = v <= static_cast<std::size_t>(x[i]) ? running : BigInt(0);
    }
  }
  BigInt total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

BigInt count_onto_op(long m, long l) {
  if (m < 0 || l < 0) throw std::invalid_argument("negative set size");
  return binomial(m - 1, l - 1);
}

ExactMatrix cartan_po_closed(int n) {
  if (n < 0) throw std::invalid_argument("negative ambient size");
  const auto size = static_cast<std::size_t>(n) + 1;
  ExactMatrix c(size, size);
  for (std::size_t i = 1; i <= size; ++i) {
    for (std::size_t j = i; j <= size; ++j) {
      c(i - 1, j - 1) = binomial(static_cast<long>(j) - 2, static_cast<long>(i) - 2);
    }
  }
  return c;
}

BigInt dim_rad_po(int n, int k) {
  if (k < 1) throw std::invalid_argument("radical power must be at least 1");
  BigInt total = 0;
  for (long m = k + 1; m <= n; ++m) {
    for (long l = 1; l <= m - k; ++l) total += binomial(n, m) * binomial(n, l) * binomial(m - 1, l - 1);
  }
  return total;
}

BigInt count_C(int n, const SubsetOfN& b) {
  if (b.n() != n) throw std::invalid_argument("target set has wrong ambient size");
  if (n == 0) return 1;
  if (!b.contains(1)) return 0;
  return paths_below_det(bar_path(n, b).bar);
}

BigInt count_EC_full(int n, const SubsetOfN& b) {
  if (b.n() != n) throw std::invalid_argument("target set has wrong ambient size");
  const std::uint32_t full = b.mask();
  const int size = b.size();
  BigInt total = 0;
  // Enumerate submasks of B, including the empty one.
  std::uint32_t x = full;
  while (true) {
    const auto sub = SubsetOfN::from_mask(n, x);
    BigInt term = count_C(n, sub);
    if ((size - sub.size()) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    if (x == 0) break;
    x = (x - 1) & full;
  }
  return total;
}

std::vector<SubsetOfN> reduce_domain_steps(const SubsetOfN& a, const SubsetOfN& b) {
  if (a.n() != b.n()) throw std::invalid_argument("sets differ in ambient size");
  std::vector<SubsetOfN> steps{a};
  SubsetOfN current = a;
  for (int target : b.elements()) {
    int pick = 0;
    for (int e : current.elements()) {
      if (e >= target) {
        pick = e;
        break;
      }
    }
    if (pick == 0) {
      throw Infeasible("no element of " + current.to_string() + " at or above " + std::to_string(target));
    }
    current = current.without(pick).with(target);
    steps.push_back(current);
  }
  return steps;
}

SubsetOfN reduce_domain(const SubsetOfN& a, const SubsetOfN& b) { return reduce_domain_steps(a, b).back(); }

std::pair<int, SubsetOfN> rename_to_initial(const SubsetOfN& a_prime, const SubsetOfN& b) {
  if (!b.is_subset_of(a_prime)) throw std::invalid_argument("renaming requires B ⊆ A'");
  const auto elems = a_prime.elements();
  const int m = static_cast<int>(elems.size());
  std::uint32_t mask = 0;
  for (int i = 0; i < m; ++i) {
    if (b.contains(elems[static_cast<std::size_t>(i)])) mask |= 1U << i;
  }
  return {m, SubsetOfN::from_mask(m, mask)};
}

BigInt cartan_entry_ec(const SubsetOfN& a, const SubsetOfN& b) {
  if (a.n() != b.n()) throw std::invalid_argument("sets differ in ambient size");
  if (a.size() < b.size()) return 0;
  if (b.empty()) return a.empty() ? 1 : 0;
  SubsetOfN reduced;
  try {
    reduced = reduce_domain(a, b);
  } catch (const Infeasible&) {
    return 0;
  }
  const auto [m, renamed] = rename_to_initial(reduced, b);
  return count_EC_full(m, renamed);
}

BigInt count_decreasing(const SubsetOfN& a, const SubsetOfN& b) {
  if (a.n() != b.n()) throw std::invalid_argument("sets differ in ambient size");
  BigInt product = 1;
  for (int i : a.elements()) {
    int below = 0;
    for (int e : b.elements()) {
      if (e <= i) ++below;
    }
    product *= below;
  }
  return product;
}

BigInt cartan_entry_ef(const SubsetOfN& a, const SubsetOfN& b) {
  if (a.n() != b.n()) throw std::invalid_argument("sets differ in ambient size");
  const std::uint32_t full = b.mask();
  const int size = b.size();
  BigInt total = 0;
  std::uint32_t x = full;
  while (true) {
    const auto sub = SubsetOfN::from_mask(b.n(), x);
    BigInt term = count_decreasing(a, sub);
    if ((size - sub.size()) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    if (x == 0) break;
    x = (x - 1) & full;
  }
  return total;
}

namespace {

template <typename EntryFn>
ExactMatrix closed_matrix_parallel(int n, EntryFn entry) {
  const auto objects = all_subsets(n);
  const std::size_t count = objects.size();
  ExactMatrix c(count, count);
  const auto total = static_cast<std::ptrdiff_t>(count * count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t p = 0; p < total; ++p) {
    const auto i = static_cast<std::size_t>(p) / count;
    const auto j = static_cast<std::size_t>(p) % count;
    c(i, j) = entry(objects[j], objects[i]);
  }
  return c;
}

template <typename EntryFn>
ExactMatrix closed_matrix_serial(int n, EntryFn entry) {
  const auto objects = all_subsets(n);
  const std::size_t count = objects.size();
  ExactMatrix c(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) c(i, j) = entry(objects[j], objects[i]);
  }
  return c;
}

}  // namespace

ExactMatrix cartan_ec_closed(int n) { return closed_matrix_parallel(n, cartan_entry_ec); }
ExactMatrix cartan_ef_closed(int n) { return closed_matrix_parallel(n, cartan_entry_ef); }

BigInt pf_monoid_size(int n) {
  if (n < 0) throw std::invalid_argument("negative ambient size");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  return f;
}

namespace serial {

ExactMatrix cartan_ec_closed(int n) { return closed_matrix_serial(n, cartan_entry_ec); }
ExactMatrix cartan_ef_closed(int n) { return closed_matrix_serial(n, cartan_entry_ef); }

}  // namespace serial

}  // namespace catalg
