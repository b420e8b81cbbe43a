#include "fcoh/checks.hpp"

#include "fcoh/hw_group.hpp"
#include "fcoh/su11_group.hpp"
#include "fcoh/su2_group.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace fcoh {

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::HW: return "hw";
    case GroupKind::SU2: return "su2";
    case GroupKind::SU11: return "su11";
  }
  return "unknown";
}

GroupKind parse_group_kind(const std::string& s) {
  if (s == "hw") return GroupKind::HW;
  if (s == "su2") return GroupKind::SU2;
  if (s == "su11") return GroupKind::SU11;
  throw std::invalid_argument("unknown group '" + s + "' (expected hw, su2 or su11)");
}

namespace {

// Uniform point in the disc of the given radius.
cplx sample_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * kPi * u(rng));
}

ComplexMatrix phase_diag(const ComplexMatrix& cartan, double phi) {
  ComplexMatrix out = ComplexMatrix::Zero(cartan.rows(), cartan.cols());
  for (Eigen::Index i = 0; i < cartan.rows(); ++i) out(i, i) = std::polar(1.0, phi * cartan(i, i).real());
  return out;
}

CompositionCheck check_hw(const CompositionCheckParams& p) {
  std::mt19937_64 rng(p.seed);
  const HWRep rep = ladder_ops(p.hw_trunc);
  if (p.hw_interior < 1 || p.hw_interior > p.hw_trunc) {
    throw std::invalid_argument("composition_check: hw_interior must lie in 1..hw_trunc");
  }
  CompositionCheck out{GroupKind::HW, p.pairs, p.hw_interior, 0.0, std::nullopt};
  for (int i = 0; i < p.pairs; ++i) {
    const cplx alpha = sample_disc(rng, p.hw_radius);
    const cplx beta = sample_disc(rng, p.hw_radius);
    const HWComposition c = hw_compose(beta, alpha);
    const ComplexMatrix lhs = displacement(beta, rep, DisplacementMethod::Exp).adjoint() *
                              displacement(alpha, rep, DisplacementMethod::Exp);
    const ComplexMatrix rhs = c.phase * displacement(c.shift, rep, DisplacementMethod::Exp);
    out.max_residual = std::max(out.max_residual, deviation_norm(lhs, rhs, out.interior));
  }
  return out;
}

CompositionCheck check_su2(const CompositionCheckParams& p) {
  std::mt19937_64 rng(p.seed);
  CompositionCheck out{GroupKind::SU2, 0, 0, 0.0, std::nullopt};
  for (int twice = 1; twice <= p.su2_max_twice_spin; ++twice) {
    const SpinRep rep = spin_ops(Spin{twice});
    int done = 0;
    while (done < p.pairs) {
      const cplx z1 = sample_disc(rng, p.su2_radius);
      const cplx z2 = sample_disc(rng, p.su2_radius);
      if (std::abs(1.0 - std::conj(z1) * z2) < 0.05) continue;  // too close to the chart singularity
      const Su2Composition c = su2_compose(z1, z2);
      const ComplexMatrix lhs = su2_displacement_zeta(z1, rep) * su2_displacement_zeta(z2, rep);
      const ComplexMatrix rhs = su2_displacement_zeta(c.zeta3, rep) * phase_diag(rep.s_z, c.phi);
      out.max_residual = std::max(out.max_residual, max_abs(lhs - rhs));
      ++done;
      ++out.pairs;
    }
  }
  return out;
}

// Inner dimension for D(zeta1) D(zeta2) on the leading d x d block: grown
// until the first d rows of D(zeta1) and columns of D(zeta2) are normalized.
int su11_inner_dim(cplx z1, cplx z2, int d, int start) {
  constexpr double kNormSlack = 1e-12;  // rounding floor of the norms is ~1e-13
  constexpr int kMaxInner = 1 << 14;
  for (int inner = start; inner <= kMaxInner; inner *= 2) {
    const ComplexMatrix rows = su11_displacement_columns(-z1, inner, d);  // D(zeta1)^dagger = D(-zeta1)
    const ComplexMatrix cols = su11_displacement_columns(z2, inner, d);
    const double worst = std::min(rows.colwise().squaredNorm().minCoeff(), cols.colwise().squaredNorm().minCoeff());
    if (1.0 - worst <= kNormSlack) return inner;
  }
  throw std::runtime_error("composition_check: su11 product does not converge within the level cap");
}

CompositionCheck check_su11(const CompositionCheckParams& p) {
  std::mt19937_64 rng(p.seed);
  const int levels = p.su11_levels;
  const int d = su11_interior_dim(levels);
  CompositionCheck out{GroupKind::SU11, p.pairs, d, 0.0, 0.0};
  for (int i = 0; i < p.pairs; ++i) {
    const cplx z1 = sample_disc(rng, p.su11_radius);
    const cplx z2 = sample_disc(rng, p.su11_radius);
    const Su11Composition c = su11_compose(z1, z2);
    const int inner = su11_inner_dim(z1, z2, d, kSu11ExpPadding * levels);
    const ComplexMatrix lhs =
        su11_displacement_columns(-z1, inner, d).adjoint() * su11_displacement_columns(z2, inner, d);
    const ComplexMatrix d3 = su11_displacement_columns(c.zeta3, d, d);
    ComplexMatrix rhs = d3;
    for (int n = 0; n < d; ++n) rhs.col(n) *= std::polar(1.0, c.phi * (n + 0.75));
    out.max_residual = std::max(out.max_residual, deviation_norm(lhs, rhs, d));

    // unconjugated numerator: exp(i Phi K_z) with a generally complex Phi
    const cplx phi_alt = su11_phase_unconjugated(z1, z2);
    ComplexMatrix alt = d3;
    for (int n = 0; n < d; ++n) alt.col(n) *= std::exp(cplx(0.0, 1.0) * phi_alt * (n + 0.75));
    out.unconjugated_residual = std::max(*out.unconjugated_residual, deviation_norm(lhs, alt, d));
  }
  return out;
}

// Real 2x2 Jacobian determinant of f at z by five-point central differences.
double jacobian_det(const std::function<cplx(cplx)>& f, cplx z, double h) {
  auto deriv = [&](cplx dir) {
    return (-f(z + 2.0 * h * dir) + 8.0 * f(z + h * dir) - 8.0 * f(z - h * dir) + f(z - 2.0 * h * dir)) / (12.0 * h);
  };
  const cplx dx = deriv(1.0);
  const cplx dy = deriv(cplx(0.0, 1.0));
  return dx.real() * dy.imag() - dx.imag() * dy.real();
}

}  // namespace

CompositionCheck composition_check(GroupKind g, const CompositionCheckParams& params) {
  if (params.pairs < 1) throw std::invalid_argument("composition_check: need at least one pair");
  switch (g) {
    case GroupKind::HW: return check_hw(params);
    case GroupKind::SU2: return check_su2(params);
    case GroupKind::SU11: return check_su11(params);
  }
  throw std::invalid_argument("composition_check: unknown group");
}

MeasureCheck measure_invariance_check(GroupKind g, int pairs, std::uint64_t seed) {
  if (pairs < 1) throw std::invalid_argument("measure_invariance_check: need at least one pair");
  std::mt19937_64 rng(seed);
  MeasureCheck out{g, 0, 0.0};
  while (out.pairs < pairs) {
    cplx z1;
    cplx z2;
    std::function<cplx(cplx)> map;
    std::function<double(cplx)> density;
    double h = 1e-3;
    switch (g) {
      case GroupKind::HW:
        z1 = sample_disc(rng, 3.0);
        z2 = sample_disc(rng, 3.0);
        map = [z1](cplx z) { return z + z1; };
        density = [](cplx) { return 1.0; };
        break;
      case GroupKind::SU2:
        z1 = sample_disc(rng, 2.0);
        z2 = sample_disc(rng, 2.0);
        if (std::abs(1.0 - std::conj(z1) * z2) < 0.1) continue;
        map = [z1](cplx z) { return su2_compose(z1, z).zeta3; };
        density = [](cplx z) { return 1.0 / std::pow(1.0 + std::norm(z), 2); };
        h = 1e-3 * std::min(1.0, std::abs(1.0 - std::conj(z1) * z2));
        break;
      case GroupKind::SU11:
        z1 = sample_disc(rng, 0.9);
        z2 = sample_disc(rng, 0.9);
        map = [z1](cplx z) { return su11_compose(z1, z).zeta3; };
        density = [](cplx z) { return 1.0 / std::pow(1.0 - std::norm(z), 2); };
        h = 1e-3 * (1.0 - std::abs(z2));
        break;
    }
    const cplx z3 = map(z2);
    const double det = std::abs(jacobian_det(map, z2, h));
    const double lhs = density(z2) / det;
    const double rhs = density(z3);
    out.max_relative_residual = std::max(out.max_relative_residual, std::abs(lhs - rhs) / rhs);
    ++out.pairs;
  }
  return out;
}

}  // namespace fcoh
