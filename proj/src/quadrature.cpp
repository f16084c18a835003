#include "vacbrown/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "vacbrown/errors.hpp"

namespace vacbrown::quad {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss
// weights belong to the odd-indexed Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(centre - dx);
    fv2[j] = f(centre + dx);
    resk += kWgk[j] * (fv1[j] + fv2[j]);
    if (j % 2 == 1) resg += kWg[j / 2] * (fv1[j] + fv2[j]);
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  resasc *= std::abs(half);
  const double value = resk * half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  // Round-off floor.
  err = std::max(err, 50.0 * 2.2e-16 * std::abs(value));
  return {lo, hi, value, err};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi, Tolerance tol) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("integration bounds must be finite");
  if (lo == hi) return {};
  std::priority_queue<Segment> queue;
  const Segment first = gauss_kronrod(f, lo, hi);
  queue.push(first);
  double total = first.value;
  double total_err = first.error;
  long evals = 15;
  int splits = 0;
  while (total_err > std::max(tol.abs_tol, tol.rel_tol * std::abs(total))) {
    if (splits >= tol.max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature on [" << lo << ", " << hi << "] stopped at error " << total_err;
      throw QuadratureError(msg.str(), total_err);
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      throw QuadratureError("quadrature interval cannot be bisected further", total_err);
    }
    const Segment left = gauss_kronrod(f, worst.lo, mid);
    const Segment right = gauss_kronrod(f, mid, worst.hi);
    evals += 30;
    ++splits;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  // Re-add from the pieces to shed accumulated update round-off.
  double sum = 0.0;
  double err = 0.0;
  while (!queue.empty()) {
    sum += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  return {sum, err, evals};
}

Series Series::variable(std::size_t order, double x0) {
  Series s(order, x0);
  if (order >= 1) s.c_[1] = 1.0;
  return s;
}

Series& Series::operator+=(const Series& o) {
  for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (std::size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Series& Series::operator*=(double k) {
  for (auto& c : c_) c *= k;
  return *this;
}

Series operator*(const Series& l, const Series& r) {
  const std::size_t n = std::min(l.order(), r.order());
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) acc += l.c_[j] * r.c_[i - j];
    out.c_[i] = acc;
  }
  return out;
}

Series operator/(const Series& l, const Series& r) {
  if (r.c_[0] == 0.0) throw DomainError("series division by a series vanishing at the origin");
  const std::size_t n = std::min(l.order(), r.order());
  Series q(n);
  for (std::size_t i = 0; i <= n; ++i) {
    double acc = l.c_[i];
    for (std::size_t j = 1; j <= i; ++j) acc -= r.c_[j] * q.c_[i - j];
    q.c_[i] = acc / r.c_[0];
  }
  return q;
}

double finite_part(const Series& psi, double b, int p, double lo, double hi) {
  if (!(lo < b && b < hi)) throw DomainError("finite_part requires lo < b < hi");
  const double d_lo = b - lo;
  const double d_hi = hi - b;
  double sum = 0.0;
  for (std::size_t j = 0; j <= psi.order(); ++j) {
    const int m = static_cast<int>(j) - p;  // integrate s^m over [-d_lo, d_hi]
    double piece;
    if (m == -1) {
      piece = std::log(d_hi / d_lo);
    } else {
      const int e = m + 1;
      piece = (std::pow(d_hi, e) - std::pow(-d_lo, e)) / e;
    }
    sum += psi[j] * piece;
  }
  return sum;
}

}  // namespace vacbrown::quad
