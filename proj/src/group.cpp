#include "fcoh/group.hpp"

#include <stdexcept>

namespace fcoh {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_chart(const Group& g, const GroupPoint& p) {
  if (!accepts_chart(g, p.chart)) {
    throw std::invalid_argument("point on chart " + std::string(to_string(p.chart)) + " does not match group " +
                                group_name(g));
  }
}

}  // namespace

std::string group_name(const Group& g) {
  return std::visit(overloaded{[](const HWGroup&) { return std::string("hw"); },
                               [](const SU2Group&) { return std::string("su2"); },
                               [](const SU11Group&) { return std::string("su11"); }},
                    g);
}

int rep_dim(const Group& g) {
  return std::visit(overloaded{[](const HWGroup& h) { return h.n_trunc; },
                               [](const SU2Group& s) { return s.spin.dim(); },
                               [](const SU11Group& k) { return k.n_levels; }},
                    g);
}

Chart group_chart(const Group& g) {
  return std::visit(overloaded{[](const HWGroup&) { return Chart::PlaneAlpha; },
                               [](const SU2Group&) { return Chart::Su2Zeta; },
                               [](const SU11Group&) { return Chart::Su11Zeta; }},
                    g);
}

GridKind group_grid_kind(const Group& g) {
  return std::visit(overloaded{[](const HWGroup&) { return GridKind::Plane; },
                               [](const SU2Group&) { return GridKind::Sphere; },
                               [](const SU11Group&) { return GridKind::Disc; }},
                    g);
}

double paper_constant(const Group& g) {
  return std::visit(overloaded{[](const HWGroup&) { return 1.0 / kPi; },
                               [](const SU2Group& s) { return s.spin.dim() / (4.0 * kPi); },
                               [](const SU11Group&) { return 1.0 / (2.0 * kPi); }},
                    g);
}

bool accepts_chart(const Group& g, Chart c) {
  return c == group_chart(g) || (std::holds_alternative<SU11Group>(g) && c == Chart::Su11Xi);
}

int default_interior(const Group& g) {
  return std::visit(overloaded{[](const HWGroup& h) { return std::min(10, h.n_trunc); },
                               [](const SU2Group& s) { return s.spin.dim(); },
                               [](const SU11Group& k) { return su11_interior_dim(k.n_levels); }},
                    g);
}

ComplexMatrix displacement_columns(const Group& g, const GroupPoint& point, int n_cols) {
  require_chart(g, point);
  if (n_cols < 0 || n_cols > rep_dim(g)) throw std::invalid_argument("displacement_columns: bad column count");
  return std::visit(
      overloaded{[&](const HWGroup& h) { return hw_displacement_columns(point.value, h.n_trunc, n_cols); },
                 [&](const SU2Group& s) -> ComplexMatrix {
                   return su2_displacement_zeta(point.value, spin_ops(s.spin)).leftCols(n_cols);
                 },
                 [&](const SU11Group& k) {
                   return point.chart == Chart::Su11Xi ? su11_displacement_columns_xi(point.value, k.n_levels, n_cols)
                                                       : su11_displacement_columns(point.value, k.n_levels, n_cols);
                 }},
      g);
}

ComplexMatrix displacement_matrix(const Group& g, const GroupPoint& point) {
  return displacement_columns(g, point, rep_dim(g));
}

FockVector probe_state(const Group& g, const GroupPoint& point) { return displacement_columns(g, point, 1).col(0); }

ComplexMatrix cartan_generator(const Group& g) {
  return std::visit(overloaded{[](const HWGroup&) -> ComplexMatrix {
                                 throw std::invalid_argument("cartan_generator: no Cartan constraint for hw");
                               },
                               [](const SU2Group& s) { return spin_ops(s.spin).s_z; },
                               [](const SU11Group& k) { return su11_ops(k.n_levels).k_z; }},
                    g);
}

}  // namespace fcoh
