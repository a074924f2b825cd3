#include "abex/verify_suite.hpp"

#include <algorithm>
#include <cmath>

#include "abex/oracle_problems.hpp"

namespace abex {

namespace {

double sq(double x) { return x * x; }
const Complex kI(0.0, 1.0);

const RadialProfile& radial_of(const Potential& p) {
  static const RadialProfile zero{};
  const auto* r = std::get_if<RadialProfile>(&p);
  return r ? *r : zero;
}

StateParams base_params(const RunConfig& cfg, int l) {
  StateParams q;
  q.l = l;
  q.l0 = cfg.field.flux.l0;
  q.mu = cfg.field.flux.mu;
  q.m = cfg.particle.mass;
  q.k3 = cfg.particle.k3;
  q.zeta = cfg.particle.zeta;
  q.epsilon = cfg.field.epsilon;
  q.gamma = cfg.field.f2.gamma;
  return q;
}

QuantumNumbers qnum(const RunConfig& cfg, int l, int n) {
  QuantumNumbers qn;
  qn.l = l;
  qn.n = n;
  qn.k3 = cfg.particle.k3;
  qn.zeta = cfg.particle.zeta;
  qn.nu = cfg.particle.nu;
  qn.equation = cfg.particle.equation;
  return qn;
}

oracle::FieldParams field_params(const StateParams& q) {
  oracle::FieldParams p;
  p.L = q.L();
  p.alpha = q.alpha;
  p.beta = q.beta;
  p.gamma = q.gamma;
  p.delta = q.delta;
  p.lambda = q.lambda;
  p.m = q.m;
  p.k3 = q.k3;
  p.zeta = q.zeta;
  p.epsilon = q.epsilon;
  return p;
}

bool dirac(const RunConfig& cfg) { return cfg.particle.equation == Equation::Dirac; }

int active_s(const RunConfig& cfg) {
  if (!dirac(cfg)) return 0;
  return cfg.particle.s == 1 ? 1 : 2;
}

void require_zeta(const SpectralResult& res, int zeta) {
  if (res.required_zeta && *res.required_zeta != zeta) {
    throw Error(ErrorCode::NoBoundState, "n = 0 Dirac level exists only for particle.zeta = " +
                                             std::to_string(*res.required_zeta));
  }
}

Case3Variant variant3(const RunConfig& cfg) {
  return radial_of(cfg.field.f0).shape == RadialShape::R2PlusInverseR2 ? Case3Variant::B : Case3Variant::A;
}

}  // namespace

std::vector<double> radial_grid(const RadialIndexSet& idx, double x_lo, double x_hi, int n_points) {
  std::vector<double> r;
  for (int i = 0; i < n_points; ++i) {
    const double x = x_lo * std::pow(x_hi / x_lo, static_cast<double>(i) / (n_points - 1));
    const bool linear = idx.x_of_r == XMap::TwoRE || idx.x_of_r == XMap::TwoRSqrtE;
    r.push_back(linear ? x / (2.0 * idx.x_scale) : std::sqrt(x / idx.x_scale));
  }
  return r;
}

ClosedFormState closed_form_state(const RunConfig& cfg, int l, int n) {
  ClosedFormState st;
  st.l = l;
  st.n = n;
  st.eigen_name = "k0";
  StateParams q = base_params(cfg, l);
  const QuantumNumbers qn = qnum(cfg, l, n);
  const double mu = q.mu;
  const auto& f0 = radial_of(cfg.field.f0);
  const auto& f1 = radial_of(cfg.field.f1);
  const int s = active_s(cfg);

  switch (cfg.field.case_tag) {
    case CaseTag::I1: {
      q.alpha = f0.alpha;
      st.spec = energy_case1(qn, mu, q.alpha, q.gamma, q.m);
      if (dirac(cfg)) require_zeta(st.spec, q.zeta);
      break;
    }
    case CaseTag::I2: {
      q.alpha = f1.alpha;
      st.spec = energy_case2(qn, mu, q.alpha, q.gamma, q.m, dirac(cfg) ? 1 : 0);
      if (dirac(cfg)) require_zeta(st.spec, q.zeta);
      break;
    }
    case CaseTag::I3: {
      if (!dirac(cfg)) {
        throw Error(ErrorCode::UnsupportedConfiguration, "case I.3 is a Dirac configuration (particle.equation)");
      }
      q.alpha = f0.alpha;
      q.beta = f0.beta;
      st.spec = energy_case3(qn, mu, variant3(cfg), q.alpha, q.beta, q.gamma, q.epsilon, q.m, s, n);
      break;
    }
    case CaseTag::II: {
      if (cfg.field.f2.shape != RadialShape::Linear) {
        throw Error(ErrorCode::UnsupportedConfiguration,
                    "closed-form k_perp^2 needs f2 = Linear (gamma r); f2 = Quadratic is oracle-only");
      }
      const double tau = dirac(cfg) ? 0.5 : 0.0;
      const KPerpResult kp = kperp_caseII(qn, mu, q.gamma, tau);
      st.spec.k0 = kp.kperp2;
      st.spec.tau = tau;
      st.eigen_name = "kperp2";
      const int s_used = dirac(cfg) ? s : 0;
      auto idx = radial_indices(RadialCase::CaseII, s_used, q, kp.kperp2);
      st.spec.scale_E = idx.x_scale;
      st.spec.indices.push_back(idx);
      break;
    }
    case CaseTag::SchrodingerA: {
      q.alpha = f0.alpha;
      q.beta = f0.beta;
      q.delta = f0.delta;
      q.lambda = f0.lambda;
      st.spec = energy_schrodinger_a(qn, mu, q.alpha, q.beta, q.gamma, q.delta, q.lambda, q.m);
      if (!st.spec.index_consistent) throw Error(ErrorCode::NoBoundState, "b <= 0: no bound state");
      break;
    }
    case CaseTag::SchrodingerB: {
      q.alpha = f0.alpha;
      q.beta = f0.beta;
      q.delta = f0.delta;
      q.lambda = f0.lambda;
      st.spec = energy_schrodinger_b(qn, mu, q.alpha, q.beta, q.gamma, q.delta, q.lambda, q.m);
      break;
    }
    case CaseTag::Spherical:
      throw Error(ErrorCode::UnsupportedConfiguration, "spherical configurations have field evaluation only");
  }
  st.q = q;
  st.roots.push_back(st.spec.k0);
  if (cfg.field.case_tag == CaseTag::I3) {
    st.roots.insert(st.roots.end(), st.spec.alternate_roots.begin(), st.spec.alternate_roots.end());
  }
  if (st.spec.indices.empty()) throw Error(ErrorCode::NoBoundState, "no radial indices for the state");
  // squaring the index relation admits roots with n_s != n (negative n_s on
  // the repulsive side); those are not states
  if (!st.spec.index_consistent) {
    throw Error(ErrorCode::NoBoundState, "n_s at the closed-form energy differs from n (spurious root)");
  }
  st.idx = st.spec.indices.back();
  return st;
}

double oracle_eigen(const RunConfig& cfg, const ClosedFormState& st, double near) {
  using namespace abex::oracle;
  const FieldParams p = field_params(st.q);
  const double edge = std::sqrt(sq(p.m) + sq(p.k3) + sq(p.gamma));
  const double pad = 1e-9 * edge;
  auto pick = [&](const OracleReport& rep, int nodes) {
    auto e = rep.find(nodes, near);
    if (!e) throw Error(ErrorCode::NoBoundStateFound, "oracle found no state with the requested node count");
    return e->value;
  };
  // only the requested level has to converge
  auto level = [&](oracle::RadialProblem pb, int nodes) {
    pb.target = nodes;
    pb.target_near = near;
    return pick(solve_radial_eigen(pb, nodes + 1), nodes);
  };
  // graded band of 1/E around the target, on its side of zero
  auto band = [&]() {
    const double E0 = std::sqrt(std::max(sq(edge) - sq(near), 1e-300));
    const double E_hi = std::min(1.6 * E0, edge), E_lo = E0 / 1.6;
    const double k_far = std::sqrt(sq(edge) - sq(E_lo)), k_in = std::sqrt(sq(edge) - sq(E_hi));
    return near > 0 ? Window{k_in, std::min(k_far, edge - pad)} : Window{std::max(-k_far, -edge + pad), -k_in};
  };
  auto nearest_root = [&](const OracleReport& rep) {
    auto e = rep.find(-1, near);
    return e->value;
  };
  // Dirac levels crowd toward the continuum edge roughly evenly in 1/E,
  // E = sqrt(edge^2 - k0^2); scan a band of 1/E around the target
  auto graded = [&](FirstOrderProblem pb) {
    const double E0 = std::sqrt(std::max(sq(edge) - sq(near), 1e-300));
    const double k_in = near > 0 ? std::max(pb.k_lo, 0.0) : std::min(pb.k_hi, 0.0);  // innermost k on this side
    const double E_cap = std::sqrt(std::max(sq(edge) - sq(k_in), 1e-300));
    const double u_lo = 1.0 / std::min(1.6 * E0, E_cap), u_hi = 1.6 / E0;
    for (int j = 0; j <= 240; ++j) {
      const double E = 1.0 / (u_lo + (u_hi - u_lo) * j / 240.0);
      const double k = std::copysign(std::sqrt(std::max(sq(edge) - sq(E), 0.0)), near);
      if (k > pb.k_lo && k < pb.k_hi) pb.scan_nodes.push_back(k);
    }
    std::sort(pb.scan_nodes.begin(), pb.scan_nodes.end());
    return pb;
  };
  const int n = st.n;
  switch (cfg.field.case_tag) {
    case CaseTag::I1:
      if (dirac(cfg)) {
        return nearest_root(solve_first_order_eigen(graded(dirac_case1_problem(p, {-edge + pad, edge - pad}))));
      }
      {
        // same graded band as the Dirac scan: the Coulomb-like levels pile up
        // at +-edge and a full-window scan would size the box for all of them
        return level(kg_case1_problem(p, band()), n);
      }
    case CaseTag::I2:
      if (dirac(cfg)) {
        return nearest_root(
            solve_first_order_eigen(graded(dirac_case2_problem(p, {p.m * (1 + 1e-12), edge - pad}))));
      }
      return std::sqrt(level(kg_case2_problem(p, {0.0, sq(edge)}), n));
    case CaseTag::I3: {
      const auto var = variant3(cfg);
      const int s = active_s(cfg);
      if (var == Case3Variant::A) return level(case3_problem(p, false, s, band()), n);
      const Case3Window w = case3_default_window(var, p.alpha, p.beta, p.gamma, p.m, p.k3, p.L, n);
      return level(case3_problem(p, true, s, {w.lo, w.hi}), n);
    }
    case CaseTag::II: {
      const int s = dirac(cfg) ? active_s(cfg) : 0;
      const double g2 = sq(p.gamma);
      const int nodes = static_cast<int>(std::lround(st.idx.n));
      return level(caseII_problem(p, s, {-10.0 * (g2 + 1.0), g2 * (1 - 1e-12)}), nodes);
    }
    case CaseTag::SchrodingerA:
    case CaseTag::SchrodingerB: {
      const bool a = cfg.field.case_tag == CaseTag::SchrodingerA;
      const double span = 10.0 * (std::abs(near) + 1.0);
      const double hi = a ? (sq(p.gamma) + sq(p.k3)) / (2.0 * p.m) : near + span;
      const double scale = 1.0 / st.spec.scale_E;
      const auto& f0 = radial_of(cfg.field.f0);
      const auto& f1 = radial_of(cfg.field.f1);
      const auto pb = schrodinger_problem(f0, f1, cfg.field.f2, p.L, p.m, p.k3, {near - span, hi},
                                          a ? scale : std::sqrt(scale));
      return level(pb, n);
    }
    case CaseTag::Spherical: break;
  }
  throw Error(ErrorCode::UnsupportedConfiguration, "no oracle for this configuration");
}

std::vector<Complex> state_components(const RunConfig& cfg, const ClosedFormState& st, double r) {
  const StateParams& q = st.q;
  const double k0 = st.spec.k0;
  auto col = [](const Eigen::Vector4cd& v) { return std::vector<Complex>(v.data(), v.data() + 4); };
  switch (cfg.field.case_tag) {
    case CaseTag::I1:
      if (dirac(cfg)) return col(reduced_spinor_case1(q, k0, 1.0, 0.0, r));
      break;
    case CaseTag::I2:
      if (dirac(cfg)) return col(reduced_spinor_case2(q, k0, 1.0, 0.0, r));
      break;
    case CaseTag::I3: {
      const int s = active_s(cfg);
      return col(reduced_spinor_case3(q, variant3(cfg), k0, s == 1 ? 1.0 : 0.0, s == 2 ? 1.0 : 0.0, 1.0, 0.0, r));
    }
    case CaseTag::SchrodingerA:
      return {Complex(psi_schrodinger(SchrodingerVariant::A, q, st.n, r))};
    case CaseTag::SchrodingerB:
      return {Complex(psi_schrodinger(SchrodingerVariant::B, q, st.n, r))};
    default: break;
  }
  return {radial_v(st.idx, 1.0, 0.0, r)};
}

// ---- residual checks ----------------------------------------------------

std::vector<ResidualCheck> residual_checks(const RunConfig& cfg, const ClosedFormState& st, double tol) {
  using namespace abex::oracle;
  std::vector<ResidualCheck> out;
  const StateParams& q = st.q;
  const double k0 = st.spec.k0;
  const RadialIndexSet& idx = st.idx;
  const auto grid = radial_grid(idx);
  auto bump = [&idx](double r) { return 1.0 + 0.01 * idx.x(r); };
  const FieldParams fp = field_params(q);
  const double L = q.L();

  auto second_order = [&](const std::string& name, std::function<double(double)> U, RadialFn v) {
    ResidualCheck c{name, 0.0, 0.0, tol};
    c.residual = residual_second_order(U, v, grid);
    c.perturbed = residual_second_order(U, [&](double r) { return v(r) * bump(r); }, grid);
    out.push_back(c);
  };
  auto operator_check = [&](const std::string& name, const DiracRadialOperator& op, SpinorFn phi) {
    ResidualCheck c{name, 0.0, 0.0, tol};
    c.residual = residual_dirac_operator(op, phi, grid);
    c.perturbed = residual_dirac_operator(op, [&](double r) { return Eigen::Vector4cd(phi(r) * bump(r)); }, grid);
    out.push_back(c);
  };
  auto pair_check = [&](const std::string& name, std::function<Eigen::Matrix2d(double)> M, PairFn pair) {
    ResidualCheck c{name, 0.0, 0.0, tol};
    c.residual = residual_first_order_pair(M, pair, grid);
    c.perturbed = residual_first_order_pair(
        M,
        [&](double r) {
          auto [a, b] = pair(r);
          return std::make_pair(a * bump(r), b * bump(r));
        },
        grid);
    out.push_back(c);
  };
  auto v_of = [&idx](double r) { return radial_v(idx, 1.0, 0.0, r); };

  switch (cfg.field.case_tag) {
    case CaseTag::I1:
    case CaseTag::I2: {
      const bool c1 = cfg.field.case_tag == CaseTag::I1;
      if (!dirac(cfg)) {
        auto U = c1 ? std::function<double(double)>([&](double r) {
          return sq(k0 - q.alpha / r) - sq(q.gamma * r - L) / sq(r) - sq(q.k3) - sq(q.m);
        })
                    : std::function<double(double)>([&](double r) {
                        return sq(k0) - sq(q.m) - sq(q.k3 - q.alpha / r) - sq(q.gamma * r - L) / sq(r);
                      });
        second_order(c1 ? "kg_radial_I1" : "kg_radial_I2", U, v_of);
        break;
      }
      auto M = [&](double r) { return c1 ? dirac_case1_matrix(fp, k0, r) : dirac_case2_matrix(fp, k0, r); };
      auto pair = [&](double r) {
        return c1 ? radial_pair_case1(q, k0, 1.0, 0.0, r) : radial_pair_case2(q, k0, 1.0, 0.0, r);
      };
      pair_check(c1 ? "dirac_pair_I1" : "dirac_pair_I2", M, pair);
      DiracRadialOperator op;
      op.f0 = [&](double r) { return c1 ? q.alpha / r : 0.0; };
      op.f1 = [&](double r) { return c1 ? 0.0 : q.alpha / r; };
      op.f2 = [&](double r) { return q.gamma * r; };
      op.L = L;
      op.m = q.m;
      op.k0 = k0;
      op.k3 = q.k3;
      operator_check(c1 ? "dirac_operator_I1" : "dirac_operator_I2", op, [&](double r) {
        return c1 ? reduced_spinor_case1(q, k0, 1.0, 0.0, r) : reduced_spinor_case2(q, k0, 1.0, 0.0, r);
      });
      break;
    }
    case CaseTag::I3: {
      const auto var = variant3(cfg);
      const int s = active_s(cfg);
      const RadialProfile f = radial_of(cfg.field.f0);
      const RadialProfile f2 = cfg.field.f2;
      const double tau = spin_tau(s), del = spin_delta(s);
      const double kap = k0 - q.epsilon * q.k3;
      second_order("dirac_squared_I3", [&](double r) {
        return sq(k0) - sq(q.k3) - sq(q.m) - 2.0 * kap * f.value(r) - sq(f2.value(r) - L + tau) / sq(r) +
               del * f2.derivative(r) / r;
      }, v_of);
      DiracRadialOperator op;
      op.f0 = [f](double r) { return f.value(r); };
      op.f1 = [f, e = q.epsilon](double r) { return e * f.value(r); };
      op.f2 = [f2](double r) { return f2.value(r); };
      op.L = L;
      op.m = q.m;
      op.k0 = k0;
      op.k3 = q.k3;
      const Complex c1 = s == 1 ? 1.0 : 0.0, c2 = s == 2 ? 1.0 : 0.0;
      operator_check("dirac_operator_I3", op,
                     [&](double r) { return reduced_spinor_case3(q, var, k0, c1, c2, 1.0, 0.0, r); });
      break;
    }
    case CaseTag::II: {
      const int s = idx.s;
      const double tau = spin_tau(s), del = spin_delta(s);
      second_order("caseII_radial", [&](double r) {
        return k0 - sq(q.gamma * r - L + tau) / sq(r) + del * q.gamma / r;
      }, v_of);
      break;
    }
    case CaseTag::SchrodingerA:
    case CaseTag::SchrodingerB: {
      const bool a = cfg.field.case_tag == CaseTag::SchrodingerA;
      const auto f0 = radial_of(cfg.field.f0), f1 = radial_of(cfg.field.f1);
      const auto f2 = cfg.field.f2;
      auto U = [&](double r) {
        return 2.0 * q.m * (k0 - f0.value(r)) - sq(f2.value(r) - L) / sq(r) - sq(q.k3 - f1.value(r));
      };
      const auto var = a ? SchrodingerVariant::A : SchrodingerVariant::B;
      second_order(a ? "schrodinger_a" : "schrodinger_b", U,
                   [&](double r) { return Complex(psi_schrodinger(var, q, st.n, r)); });
      break;
    }
    case CaseTag::Spherical: break;
  }
  return out;
}

StateCheck check_state(const RunConfig& cfg, int l, int n, const VerifyOptions& opt) {
  StateCheck c;
  c.n = n;
  c.l = l;
  ClosedFormState st = closed_form_state(cfg, l, n);
  double worst = 0.0;
  double worst_oracle = 0.0;
  double first_cf = 0.0;
  for (size_t i = 0; i < st.roots.size(); ++i) {
    const double cf = st.roots[i] * (1.0 + opt.perturb_formula);
    const double orc = oracle_eigen(cfg, st, cf);
    const double rel = std::abs(cf - orc) / std::max(std::abs(cf), 1e-300);
    if (i == 0) {
      first_cf = cf;
      worst_oracle = orc;
    }
    worst = std::max(worst, rel);
  }
  c.closed_form = first_cf;
  c.oracle = worst_oracle;
  c.eigen_rel = worst;
  if (opt.residuals) {
    c.residuals = residual_checks(cfg, st, opt.tol_residual);
    const RadialIndexSet& idx = st.idx;
    const double r_mid = radial_grid(idx, 1.0, 1.0, 2)[0];
    c.norm = oracle::normalize([&](double r) { return radial_v(idx, 1.0, 0.0, r); }, r_mid);
  }
  return c;
}

// ---- axial solutions ------------------------------------------------------

ResidualCheck lightfront_check(const LightfrontState& s, const ScalarProfile& f, double tol) {
  const AxialProfile prof{AxialArgument::Lightfront, f};
  auto f0 = [&](double z, double x0) { return axial_potential(prof, PotentialRole::F0, z, x0); };
  auto f1 = [&](double z, double x0) { return axial_potential(prof, PotentialRole::F1, z, x0); };
  std::vector<std::pair<double, double>> pts;
  for (double z : {-0.8, -0.3, 0.2, 0.7}) {
    for (double x0 : {-0.6, -0.1, 0.4, 0.9}) pts.emplace_back(z, x0);
  }
  auto w = [&](double z, double x0) { return lightfront_w(s, f, z, x0); };
  ResidualCheck c{"lightfront_w", 0.0, 0.0, tol};
  c.residual = oracle::residual_w_equation(f0, f1, s.nu, s.m, s.kperp2, w, pts);
  c.perturbed = oracle::residual_w_equation(
      f0, f1, s.nu, s.m, s.kperp2, [&](double z, double x0) { return w(z, x0) * (1.0 + 0.01 * (z + 2.0 * x0)); },
      pts);
  return c;
}

ResidualCheck boost_check(BoostVariant variant, int nu, double lambda_ev, double alpha, double m, double kperp2,
                          double tol) {
  const ScalarProfile f(variant == BoostVariant::A ? ScalarKind::Linear : ScalarKind::SqrtAbs, alpha);
  const AxialProfile prof{AxialArgument::BoostInvariant, f};
  auto f0 = [&](double z, double x0) { return axial_potential(prof, PotentialRole::F0, z, x0); };
  auto f1 = [&](double z, double x0) { return axial_potential(prof, PotentialRole::F1, z, x0); };
  std::vector<std::pair<double, double>> pts;
  for (double xib : {0.6, 1.5, 3.0, 4.5}) {
    for (double eta : {-0.5, 0.0, 0.7}) pts.emplace_back(std::sqrt(xib) * std::sinh(eta), std::sqrt(xib) * std::cosh(eta));
  }
  auto w = [&](double z, double x0) { return boost_w(nu, lambda_ev, variant, alpha, m, kperp2, z, x0); };
  ResidualCheck c{variant == BoostVariant::A ? "boost_w_a" : "boost_w_b", 0.0, 0.0, tol};
  c.residual = oracle::residual_w_equation(f0, f1, nu, m, kperp2, w, pts);
  c.perturbed = oracle::residual_w_equation(
      f0, f1, nu, m, kperp2, [&](double z, double x0) { return w(z, x0) * (1.0 + 0.01 * (z + 2.0 * x0)); }, pts);
  return c;
}

ResidualCheck boost_ode_check(BoostVariant variant, int nu, double lambda_ev, double alpha, double m, double kperp2,
                              double tol) {
  const ScalarProfile f(variant == BoostVariant::A ? ScalarKind::Linear : ScalarKind::SqrtAbs, alpha);
  const double M = sq(m) + kperp2;
  auto residual = [&](const std::function<Complex(double)>& w) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i <= 30; ++i) {
      const double s = 0.5 + 4.5 * i / 30.0;
      const double h = 1e-3 * s;
      const Complex w0 = w(s), w1 = oracle::d1(w, s, h), w2 = oracle::d2(w, s, h);
      const Complex a = 4.0 * s * s * w2, b = 4.0 * s * w1;
      const Complex c = (sq(lambda_ev - f.value(s)) + s * (M + 2.0 * kI * double(nu) * f.derivative(s))) * w0;
      num = std::max(num, std::abs(a + b + c));
      den = std::max({den, std::abs(a), std::abs(b), std::abs(c)});
    }
    return num / den;
  };
  auto w = [&](double s) { return boost_w_reduced(nu, lambda_ev, variant, alpha, m, kperp2, s); };
  ResidualCheck c{variant == BoostVariant::A ? "boost_ode_a" : "boost_ode_b", 0.0, 0.0, tol};
  c.residual = residual(w);
  c.perturbed = residual([&](double s) { return w(s) * (1.0 + 0.01 * s); });
  return c;
}

ResidualCheck time_phase_check(const ScalarProfile& f, double k3, double kperp2, double m, double tol) {
  auto residual = [&](const std::function<Complex(double)>& w) {
    double num = 0.0, den = 0.0;
    for (int i = 1; i <= 30; ++i) {
      const double x0 = 0.1 * i;
      const Complex lhs = 2.0 * kI * m * oracle::d1(w, x0, 1e-3);
      const Complex rhs = (kperp2 + sq(k3 - f.value(x0))) * w(x0);
      num = std::max(num, std::abs(lhs - rhs));
      den = std::max({den, std::abs(lhs), std::abs(rhs)});
    }
    return num / den;
  };
  auto w = [&](double x0) { return std::exp(-kI * schrodinger_time_phase(f, k3, kperp2, m, x0)); };
  ResidualCheck c{"time_phase", 0.0, 0.0, tol};
  c.residual = residual(w);
  c.perturbed = residual([&](double x0) { return w(x0) * (1.0 + 0.01 * x0); });
  return c;
}

ResidualCheck gauge_check(const AxialProfile& p0, const AxialProfile& p1, double kperp2, double m, double tol) {
  Sampler2D f0 = [p0](double z, double x0) { return axial_potential(p0, PotentialRole::F0, z, x0); };
  Sampler2D f1 = [p1](double z, double x0) { return axial_potential(p1, PotentialRole::F1, z, x0); };
  Sampler2D d0f1 = [p1](double z, double x0) { return axial_potential_gradient(p1, PotentialRole::F1, z, x0).second; };
  const GaugeReduction g = gauge_reduce(f0, f1, kperp2, m, d0f1);
  // smooth test wave packet; the identity holds for any psi
  auto psi = [](double z, double x0) {
    return std::exp(-0.5 * sq(z - 0.3) + kI * (0.7 * z - 0.4 * x0)) * (1.0 + 0.2 * x0 * x0);
  };
  auto residual = [&](double v_scale) {
    auto w = [&](double z, double x0) { return std::exp(-kI * g.phi(z, x0)) * psi(z, x0); };
    const double h = 2e-3;
    double num = 0.0, den = 0.0;
    for (double z : {-0.9, -0.4, 0.1, 0.6, 1.1}) {
      for (double x0 : {0.2, 0.7, 1.2}) {
        auto wz = [&](double t) { return w(t, x0); };
        auto wt = [&](double t) { return w(z, t); };
        auto pz = [&](double t) { return psi(t, x0); };
        auto pt = [&](double t) { return psi(z, t); };
        const double F0 = f0(z, x0), F1 = f1(z, x0);
        const double dzf1 = oracle::d1([&](double t) { return f1(t, x0); }, z, h);
        const Complex w0 = w(z, x0);
        const Complex w_z = oracle::d1(wz, z, h), w_zz = oracle::d2(wz, z, h), w_t = oracle::d1(wt, x0, h);
        // (i dz - f1)^2 w
        const Complex p3 = -w_zz - kI * dzf1 * w0 - 2.0 * kI * F1 * w_z + F1 * F1 * w0;
        const Complex lhs = 2.0 * m * (kI * w_t - F0 * w0) - kperp2 * w0 - p3;
        const Complex psi0 = psi(z, x0);
        const Complex hpsi = -oracle::d2(pz, z, h) / (2.0 * m) + v_scale * g.V(z, x0) * psi0;
        const Complex rhs = 2.0 * m * std::exp(-kI * g.phi(z, x0)) * (kI * oracle::d1(pt, x0, h) - hpsi);
        num = std::max(num, std::abs(lhs - rhs));
        den = std::max({den, std::abs(2.0 * m * kI * w_t), std::abs(w_zz), std::abs(2.0 * m * F0 * w0),
                        std::abs(p3), std::abs(rhs)});
      }
    }
    return num / den;
  };
  ResidualCheck c{"gauge_reduction", 0.0, 0.0, tol};
  c.residual = residual(1.0);
  c.perturbed = residual(1.01);
  return c;
}

std::vector<ResidualCheck> axial_checks(const RunConfig& cfg, double tol) {
  std::vector<ResidualCheck> out;
  if (cfg.field.case_tag != CaseTag::II) return out;
  const auto* a0 = std::get_if<AxialProfile>(&cfg.field.f0);
  const auto* a1 = std::get_if<AxialProfile>(&cfg.field.f1);
  const auto& p = cfg.particle;
  const AxialProfile* a = a0 ? a0 : a1;
  if (!a) return out;
  if (a->argument == AxialArgument::Lightfront) {
    out.push_back(lightfront_check({p.lambda_ev, p.nu, p.mass, p.kperp2}, a->f, tol));
  } else if (a->argument == AxialArgument::BoostInvariant) {
    const auto k = a->f.kind();
    if (k == ScalarKind::Linear || k == ScalarKind::SqrtAbs) {
      const auto var = k == ScalarKind::Linear ? BoostVariant::A : BoostVariant::B;
      out.push_back(boost_check(var, p.nu, p.lambda_ev, a->f.alpha(), p.mass, p.kperp2, tol));
      out.push_back(boost_ode_check(var, p.nu, p.lambda_ev, a->f.alpha(), p.mass, p.kperp2, tol));
    }
  }
  if (a1 && !a0 && a1->argument == AxialArgument::Time) {
    out.push_back(time_phase_check(a1->f, p.k3, p.kperp2, p.mass, std::min(tol, 1e-8)));
  }
  const AxialProfile zero{AxialArgument::Z, ScalarProfile()};
  out.push_back(gauge_check(a0 ? *a0 : zero, a1 ? *a1 : zero, p.kperp2, p.mass, std::min(tol, 1e-8)));
  return out;
}

}  // namespace abex
