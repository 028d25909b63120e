#include "catalg/maps.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "catalg/errors.hpp"

namespace catalg {

namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxAmbient) {
    throw std::invalid_argument("ambient size out of range: " + std::to_string(n));
  }
}

}  // namespace

SubsetOfN::SubsetOfN(int n, std::span<const int> elements) : n_(n) {
  check_ambient(n);
  int prev = 0;
  for (int e : elements) {
    if (e <= prev || e > n) {
      throw std::invalid_argument("subset elements must be strictly increasing in [1, n]");
    }
    mask_ |= 1U << (e - 1);
    prev = e;
  }
}

SubsetOfN SubsetOfN::from_mask(int n, std::uint32_t mask) {
  check_ambient(n);
  if (n < 32 && (mask >> n) != 0) {
    throw std::invalid_argument("mask has bits outside [1, n]");
  }
  SubsetOfN s;
  s.n_ = n;
  s.mask_ = mask;
  return s;
}

SubsetOfN SubsetOfN::initial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("initial segment larger than ambient set");
  return from_mask(n, k == 0 ? 0U : ((1U << k) - 1U));
}

int SubsetOfN::size() const { return std::popcount(mask_); }

std::vector<int> SubsetOfN::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int e = 1; e <= n_; ++e) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

int SubsetOfN::element_sum() const {
  int s = 0;
  for (int e = 1; e <= n_; ++e) {
    if (contains(e)) s += e;
  }
  return s;
}

SubsetOfN SubsetOfN::with(int e) const {
  if (e < 1 || e > n_) throw std::invalid_argument("element outside [1, n]");
  return from_mask(n_, mask_ | (1U << (e - 1)));
}

SubsetOfN SubsetOfN::without(int e) const {
  if (e < 1 || e > n_) throw std::invalid_argument("element outside [1, n]");
  return from_mask(n_, mask_ & ~(1U << (e - 1)));
}

std::string SubsetOfN::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

bool canonical_less(const SubsetOfN& a, const SubsetOfN& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

std::vector<SubsetOfN> all_subsets(int n) {
  check_ambient(n);
  std::vector<SubsetOfN> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (1U << n); ++m) out.push_back(SubsetOfN::from_mask(n, m));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Morphism::Morphism(SubsetOfN dom, SubsetOfN cod, std::span<const int> values)
    : dom_(dom), cod_(cod) {
  if (dom.n() != cod.n()) throw std::invalid_argument("morphism endpoints differ in ambient size");
  if (values.size() != static_cast<std::size_t>(dom.size())) {
    throw std::invalid_argument("value table must have one entry per domain element");
  }
  std::uint32_t hit = 0;
  std::size_t k = 0;
  for (int x : dom.elements()) {
    const int y = values[k++];
    if (!cod.contains(y)) throw std::invalid_argument("value outside codomain");
    image_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y);
    hit |= 1U << (y - 1);
  }
  if (hit != cod.mask()) throw std::invalid_argument("map is not onto its codomain");
}

Morphism Morphism::identity(const SubsetOfN& a) {
  Morphism m;
  m.dom_ = a;
  m.cod_ = a;
  for (int x : a.elements()) m.image_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
  return m;
}

std::vector<int> Morphism::values() const {
  std::vector<int> out;
  for (int x : dom_.elements()) out.push_back((*this)(x));
  return out;
}

bool Morphism::is_identity() const {
  if (!(dom_ == cod_)) return false;
  for (int x : dom_.elements()) {
    if ((*this)(x) != x) return false;
  }
  return true;
}

bool Morphism::is_order_preserving() const {
  int prev = 0;
  for (int x : dom_.elements()) {
    if ((*this)(x) < prev) return false;
    prev = (*this)(x);
  }
  return true;
}

bool Morphism::is_order_decreasing() const {
  for (int x : dom_.elements()) {
    if ((*this)(x) > x) return false;
  }
  return true;
}

std::string Morphism::to_string() const {
  std::ostringstream os;
  os << dom_.to_string() << "->" << cod_.to_string() << ":[";
  bool first = true;
  for (int v : values()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << ']';
  return os.str();
}

bool value_table_less(const Morphism& a, const Morphism& b) {
  if (a.dom_.mask() != b.dom_.mask()) return a.dom_.mask() < b.dom_.mask();
  if (a.cod_.mask() != b.cod_.mask()) return a.cod_.mask() < b.cod_.mask();
  for (int x : a.dom_.elements()) {
    if (a(x) != b(x)) return a(x) < b(x);
  }
  return false;
}

std::size_t Morphism::hash() const {
  std::size_t h = (static_cast<std::size_t>(dom_.mask()) << 20) ^ cod_.mask() ^
                  (static_cast<std::size_t>(dom_.n()) << 40);
  for (int x = 1; x <= dom_.n(); ++x) {
    h = h * 1099511628211ULL + image_[static_cast<std::size_t>(x)];
  }
  return h;
}

bool is_order_preserving(const Morphism& f) { return f.is_order_preserving(); }
bool is_order_decreasing(const Morphism& f) { return f.is_order_decreasing(); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.cod() == g.dom())) {
    throw EndpointMismatch("cannot compose " + g.to_string() + " after " + f.to_string());
  }
  Morphism out;
  out.dom_ = f.dom();
  out.cod_ = g.cod();
  for (int x : f.dom().elements()) {
    out.image_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(g(f(x)));
  }
  return out;
}

std::optional<Morphism> factor_through(const Morphism& m, const Morphism& f) {
  if (!(m.dom() == f.dom()) || m.n() != f.n()) return std::nullopt;
  Morphism g;
  g.dom_ = f.cod();
  g.cod_ = m.cod();
  for (int x : f.dom().elements()) {
    auto& slot = g.image_[static_cast<std::size_t>(f(x))];
    const auto want = static_cast<std::uint8_t>(m(x));
    if (slot == 0) {
      slot = want;
    } else if (slot != want) {
      return std::nullopt;
    }
  }
  return g;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::PO: return "po";
    case Family::PF: return "pf";
    case Family::PC: return "pc";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "po") return Family::PO;
  if (lower == "pf") return Family::PF;
  if (lower == "pc") return Family::PC;
  throw std::invalid_argument("unknown family '" + s + "' (expected po, pf or pc)");
}

bool satisfies(Family family, const Morphism& f) {
  switch (family) {
    case Family::PO: return f.is_order_preserving();
    case Family::PF: return f.is_order_decreasing();
    case Family::PC: return f.is_order_preserving() && f.is_order_decreasing();
  }
  return false;
}

namespace {

struct HomSearch {
  bool preserving;
  bool decreasing;
  std::vector<int> dom;
  std::vector<int> cod;
  SubsetOfN dom_set;
  SubsetOfN cod_set;
  std::vector<int> values;
  std::vector<int> hits;  // per codomain slot
  int missing = 0;
  std::vector<Morphism>* out;

  // Assigns values to dom[pos..]; codomain candidates tried in increasing
  // order, so results come out lexicographic on value tables.
  void run(std::size_t pos) {
    const int remaining = static_cast<int>(dom.size() - pos);
    if (missing > remaining) return;
    if (pos == dom.size()) {
      out->emplace_back(dom_set, cod_set, values);
      return;
    }
    const int x = dom[pos];
    for (std::size_t k = 0; k < cod.size(); ++k) {
      const int y = cod[k];
      if (decreasing && y > x) break;
      if (preserving && pos > 0 && y < values[pos - 1]) continue;
      values[pos] = y;
      if (hits[k]++ == 0) --missing;
      run(pos + 1);
      if (--hits[k] == 0) ++missing;
    }
  }
};

}  // namespace

std::vector<Morphism> enumerate_hom(Family family, const SubsetOfN& a, const SubsetOfN& b) {
  if (a.n() != b.n()) throw std::invalid_argument("hom endpoints differ in ambient size");
  std::vector<Morphism> out;
  if (a.size() < b.size()) return out;
  if (b.empty()) {
    if (a.empty()) out.push_back(Morphism::identity(a));
    return out;
  }
  HomSearch s{family != Family::PF,
              family != Family::PO,
              a.elements(),
              b.elements(),
              a,
              b,
              std::vector<int>(static_cast<std::size_t>(a.size())),
              std::vector<int>(static_cast<std::size_t>(b.size())),
              b.size(),
              &out};
  s.run(0);
  return out;
}

std::vector<Morphism> enumerate_monoid(const MonoidFamily& family, int max_n) {
  if (family.n < 0) throw std::invalid_argument("negative ambient size");
  if (family.n > max_n) {
    throw ResourceLimit("n = " + std::to_string(family.n) + " exceeds cap " + std::to_string(max_n));
  }
  const auto objects = all_subsets(family.n);
  std::vector<Morphism> out;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      auto hom = enumerate_hom(family.tag, a, b);
      out.insert(out.end(), hom.begin(), hom.end());
    }
  }
  return out;
}

Morphism corestrict(int n, const PartialMap& p) {
  if (p.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("partial map has wrong length");
  std::uint32_t dom = 0;
  std::uint32_t cod = 0;
  std::vector<int> values;
  for (int x = 1; x <= n; ++x) {
    const int y = p[static_cast<std::size_t>(x - 1)];
    if (y == 0) continue;
    if (y < 1 || y > n) throw std::invalid_argument("partial map value outside [1, n]");
    dom |= 1U << (x - 1);
    cod |= 1U << (y - 1);
    values.push_back(y);
  }
  return Morphism(SubsetOfN::from_mask(n, dom), SubsetOfN::from_mask(n, cod), values);
}

}  // namespace catalg
