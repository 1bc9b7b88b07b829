#include "psl/necklace.hpp"

#include <algorithm>
#include <set>

#include "psl/analysis.hpp"

namespace psl {

std::string SelfDualNecklace::to_string() const {
  std::string s;
  for (int b : beads) s += static_cast<char>('0' + b);
  return s;
}

std::uint64_t euler_phi(std::uint64_t k) {
  std::uint64_t result = k;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

BigInt q_formula(int m) {
  if (m < 1) throw std::invalid_argument("q_formula needs m >= 1");
  BigInt sum = 0;
  for (int k = 1; k <= m; k += 2) {
    if (m % k != 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(m / k));
    sum += term * BigInt(static_cast<unsigned long>(euler_phi(static_cast<std::uint64_t>(k))));
  }
  if (sum % (2 * m) != 0) throw std::logic_error("necklace sum not divisible by 2m");
  BigInt head;
  mpz_ui_pow_ui(head.get_mpz_t(), 2, static_cast<unsigned long>((m - 1) / 2));
  BigInt total = head + sum / (2 * m);
  if (total % 2 != 0) throw std::logic_error("necklace count is odd before halving");
  return total / 2;
}

bool is_self_dual(const std::vector<int>& beads) {
  if (beads.empty() || beads.size() % 2 != 0) return false;
  const std::size_t m = beads.size() / 2;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    if (beads[i] != 0 && beads[i] != 1) return false;
    if (i < m && beads[i] == beads[i + m]) return false;
  }
  return true;
}

std::vector<int> canonical_beads(const std::vector<int>& beads) {
  const std::size_t len = beads.size();
  std::vector<int> best = beads;
  std::vector<int> cand(len);
  for (std::size_t r = 0; r < len; ++r) {
    for (std::size_t i = 0; i < len; ++i) cand[i] = beads[(i + r) % len];
    best = std::min(best, cand);
    for (std::size_t i = 0; i < len; ++i) cand[i] = beads[(r + len - i) % len];
    best = std::min(best, cand);
  }
  return best;
}

std::vector<SelfDualNecklace> enumerate_selfdual(int m) {
  if (m < 1 || m > 24) throw std::invalid_argument("enumerate_selfdual supports 1 <= m <= 24");
  std::set<std::vector<int>> seen;
  std::vector<int> beads(2 * m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    for (int i = 0; i < m; ++i) {
      beads[i] = (mask >> (m - 1 - i)) & 1;
      beads[i + m] = 1 - beads[i];
    }
    seen.insert(canonical_beads(beads));
  }
  std::vector<SelfDualNecklace> out;
  for (const auto& b : seen) out.push_back({m, b});
  return out;
}

SelfDualNecklace parse_necklace(std::string_view bits) {
  std::vector<int> beads;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("necklace beads must be 0 or 1");
    beads.push_back(ch - '0');
  }
  if (!is_self_dual(beads)) {
    throw std::invalid_argument("'" + std::string(bits) + "' is not self-dual (need 2m beads with opposite beads different)");
  }
  return {static_cast<int>(beads.size() / 2), beads};
}

namespace {

bool verify_construction(const NecklaceArrangement& out, const std::vector<int>& cross_sign) {
  const int m = out.necklace.m;
  const CellComplex c(out.diagram);
  ImMembership im = is_in_im(c);
  if (!im.in_im || c.face(*im.ge5_face).side_count() != 2 * m) return false;

  Rational min_x = out.zonogon.vertices[0].x, max_x = min_x;
  for (const Point& p : out.zonogon.vertices) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
  }
  for (int i = 0; i < m; ++i) {
    Point x = intersection(out.lines.lines[i], out.lines.lines[i + m]);
    if (cross_sign[i] > 0 ? x.x <= max_x : x.x >= min_x) return false;
  }
  return true;
}

}  // namespace

NecklaceArrangement build_arrangement(const SelfDualNecklace& c, const NecklaceOptions& options) {
  const int m = c.m;
  if (m < 3 || !is_self_dual(c.beads) || static_cast<int>(c.beads.size()) != 2 * m) {
    throw std::invalid_argument("build_arrangement needs a self-dual necklace with m >= 3");
  }
  NecklaceArrangement out{c, {}, {}, WiringDiagram::validate(1, {}), {}};
  ZonogonConstruction& z = out.zonogon;
  z.slopes = options.slopes;
  if (z.slopes.empty()) {
    for (int i = 0; i < m; ++i) z.slopes.push_back(Rational(i));
  }
  if (static_cast<int>(z.slopes.size()) != m || !std::is_sorted(z.slopes.begin(), z.slopes.end()) ||
      std::adjacent_find(z.slopes.begin(), z.slopes.end()) != z.slopes.end()) {
    throw std::invalid_argument("direction slopes must be m strictly increasing values");
  }

  Point sum{0, 0};
  for (const Rational& s : z.slopes) {
    sum.x += 1;
    sum.y += s;
  }
  Point p{-sum.x / 2, -sum.y / 2};
  for (int j = 0; j < 2 * m; ++j) {
    z.vertices.push_back(p);
    int sign = j < m ? 1 : -1;
    p.x += sign;
    p.y += sign * z.slopes[j % m];
  }

  std::vector<Line> base(2 * m);
  for (int j = 0; j < 2 * m; ++j) {
    const Rational& s = z.slopes[j % m];
    base[j] = {s, z.vertices[j].y - s * z.vertices[j].x};
  }

  std::vector<int> cross_sign(m);
  for (int i = 0; i < m; ++i) cross_sign[i] = c.beads[i] == 1 ? 1 : -1;

  z.epsilon = 1;
  for (z.halvings = 0; z.halvings <= options.max_halvings; ++z.halvings, z.epsilon /= 2) {
    out.lines.lines = base;
    z.tilt.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      const Point& a = z.vertices[i + m];
      const Point& b = z.vertices[(i + m + 1) % (2 * m)];
      Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
      // Crossing abscissa is mid.x + (b_i - b_{i+m}) / delta.
      int gap_sign = sgn(base[i].intercept - base[i + m].intercept);
      Rational delta = z.epsilon * (gap_sign * cross_sign[i]);
      z.tilt[i] = delta;
      Rational slope = base[i + m].slope + delta;
      out.lines.lines[i + m] = {slope, mid.y - slope * mid.x};
    }
    try {
      LinesDiagram ld = lines_to_diagram(out.lines);
      out.diagram = ld.diagram;
      out.line_of_wire = ld.line_of_wire;
    } catch (const LineError&) {
      continue;
    }
    if (verify_construction(out, cross_sign)) return out;
  }
  throw EpsilonExhaustedError("no epsilon up to 2^-" + std::to_string(options.max_halvings) + " satisfies the construction for " +
                              c.to_string());
}

}  // namespace psl
