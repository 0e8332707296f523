#include "hypcover/hyperbolic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "hypcover/curve.hpp"
#include "hypcover/errors.hpp"

namespace hypcover {

HPoint::HPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im) || !(im > 0.0)) {
    throw InvalidPoint("point is not in the upper half-plane");
  }
}

namespace {

double parse_double(std::string_view s, std::string_view whole) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed point '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HPoint HPoint::parse(std::string_view text) {
  if (text.size() < 2 || text.back() != 'i') throw ParseError("malformed point '" + std::string(text) + "'");
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) throw ParseError("malformed point '" + std::string(text) + "'");
  return HPoint(parse_double(body.substr(0, split), text), parse_double(body.substr(split), text));
}

std::string HPoint::to_string() const { return format_double(re_) + "+" + format_double(im_) + "i"; }

HPath::HPath(std::vector<HPoint> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw DegeneratePair("a path needs at least two nodes");
  for (std::size_t k = 1; k < nodes_.size(); ++k) {
    if (nodes_[k] == nodes_[k - 1]) throw DegeneratePair("consecutive path nodes coincide");
  }
}

Complex Geodesic::point(double t) const {
  if (kind == Kind::vertical) return {abscissa, (1.0 - t) * height_from + t * height_to};
  double theta = (1.0 - t) * angle_from + t * angle_to;
  return {center + radius * std::cos(theta), radius * std::sin(theta)};
}

Complex Geodesic::velocity(double t) const {
  if (kind == Kind::vertical) return {0.0, height_to - height_from};
  double theta = (1.0 - t) * angle_from + t * angle_to;
  double dtheta = angle_to - angle_from;
  return {-radius * std::sin(theta) * dtheta, radius * std::cos(theta) * dtheta};
}

HPoint mobius_apply(const UniMat& m, const HPoint& z) { return mobius_apply(m.to_double(), z); }

double dist_h(const HPoint& z, const HPoint& w) {
  const double dx = z.re() - w.re();
  const double dy = z.im() - w.im();
  const double x = std::max(1.0, 1.0 + (dx * dx + dy * dy) / (2.0 * z.im() * w.im()));
  return std::log(x + std::sqrt(x * x - 1.0));
}

double kr_density(const HPoint& z, Complex v) { return std::abs(v) / z.im(); }

Geodesic geodesic_between(const HPoint& z, const HPoint& w) {
  if (z == w) throw DegeneratePair("geodesic endpoints coincide");
  Geodesic g;
  const double scale = std::max({1.0, std::abs(z.re()), std::abs(w.re())});
  if (std::abs(z.re() - w.re()) <= 1e-12 * scale) {
    g.kind = Geodesic::Kind::vertical;
    g.abscissa = z.re();
    g.height_from = z.im();
    g.height_to = w.im();
    return g;
  }
  g.kind = Geodesic::Kind::arc;
  g.center = (std::norm(w.complex()) - std::norm(z.complex())) / (2.0 * (w.re() - z.re()));
  g.radius = std::abs(z.complex() - g.center);
  g.angle_from = std::atan2(z.im(), z.re() - g.center);
  g.angle_to = std::atan2(w.im(), w.re() - g.center);
  return g;
}

namespace quadrature {

double simpson_unit(const std::function<double(double)>& f) {
  // n = 2 panels to start; ends, odd-index and even-interior sums are reused on refinement.
  double ends = f(0.0) + f(1.0);
  double evens = 0.0;
  double odds = f(0.5);
  long n = 2;
  double prev = (ends + 4.0 * odds) / 6.0;
  for (int doubling = 1; doubling <= kMaxDoublings; ++doubling) {
    evens += odds;
    odds = 0.0;
    n *= 2;
    const double h = 1.0 / static_cast<double>(n);
    for (long k = 1; k < n; k += 2) odds += f(static_cast<double>(k) * h);
    const double next = h / 3.0 * (ends + 4.0 * odds + 2.0 * evens);
    if (doubling >= 3 && std::abs(next - prev) <= kRelTol * std::max(1.0, std::abs(next))) return next;
    prev = next;
  }
  throw NoConvergence("Simpson refinement did not converge within the doubling cap");
}

}  // namespace quadrature

double path_length_kr(const HPath& path) {
  double total = 0.0;
  const auto& nodes = path.nodes();
  for (std::size_t k = 1; k < nodes.size(); ++k) {
    const Complex from = nodes[k - 1].complex();
    const Complex step = nodes[k].complex() - from;
    total += quadrature::simpson_unit([&](double t) { return kr_density(HPoint(from + t * step), step); });
  }
  return total;
}

double path_length_kr(const Geodesic& geodesic) {
  return quadrature::simpson_unit(
      [&](double t) { return kr_density(HPoint(geodesic.point(t)), geodesic.velocity(t)); });
}

double dist_by_integration(const HPoint& z, const HPoint& w) {
  if (z == w) return 0.0;
  return path_length_kr(geodesic_between(z, w));
}

}  // namespace hypcover
