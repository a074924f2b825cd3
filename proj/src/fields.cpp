#include "abex/fields.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace abex {

FluxDecomposition decompose_flux(double flux_quanta, int charge_sign) {
  if (!std::isfinite(flux_quanta)) {
    throw Error(ErrorCode::DomainError, "flux_quanta must be finite");
  }
  if (charge_sign != 1 && charge_sign != -1) {
    throw Error(ErrorCode::DomainError, "charge_sign must be +1 or -1");
  }
  const double t = -static_cast<double>(charge_sign) * flux_quanta;
  double l0 = std::floor(t);
  double mu = t - l0;
  if (mu >= 1.0) {  // t just below an integer
    l0 += 1.0;
    mu = 0.0;
  }
  FluxDecomposition out;
  out.flux_quanta = flux_quanta;
  out.charge_sign = charge_sign;
  out.l0 = static_cast<long>(l0);
  out.mu = mu;
  return out;
}

// ---------------------------------------------------------------------------

double RadialProfile::value(double r) const {
  const double m = mass;
  switch (shape) {
    case RadialShape::Zero: return 0.0;
    case RadialShape::InverseR: return alpha / r;
    case RadialShape::InverseR2: return beta / (r * r);
    case RadialShape::InverseRPlusInverseR2: return alpha / r + beta / (r * r);
    case RadialShape::Linear: return gamma * r;
    case RadialShape::Quadratic: return gamma * r * r;
    case RadialShape::R2PlusInverseR2: return alpha * r * r + beta / (r * r);
    case RadialShape::SchrodingerA0:
      return alpha / r + delta / (r * r) + 2.0 * lambda / (r * r * r) * (beta - m * lambda / r);
    case RadialShape::SchrodingerA1: return beta / r - 2.0 * m * lambda / (r * r);
    case RadialShape::SchrodingerB0: {
      const double r2 = r * r;
      return alpha * r2 + beta / r2 - 2.0 * m * (lambda * lambda / (r2 * r2) + delta * delta * r2 * r2);
    }
    case RadialShape::SchrodingerB1: return -2.0 * m * (lambda / (r * r) + delta * r * r);
  }
  return 0.0;
}

double RadialProfile::derivative(double r) const {
  const double m = mass;
  const double r2 = r * r;
  switch (shape) {
    case RadialShape::Zero: return 0.0;
    case RadialShape::InverseR: return -alpha / r2;
    case RadialShape::InverseR2: return -2.0 * beta / (r2 * r);
    case RadialShape::InverseRPlusInverseR2: return -alpha / r2 - 2.0 * beta / (r2 * r);
    case RadialShape::Linear: return gamma;
    case RadialShape::Quadratic: return 2.0 * gamma * r;
    case RadialShape::R2PlusInverseR2: return 2.0 * alpha * r - 2.0 * beta / (r2 * r);
    case RadialShape::SchrodingerA0:
      return -alpha / r2 - 2.0 * delta / (r2 * r) - 6.0 * lambda * beta / (r2 * r2) +
             8.0 * m * lambda * lambda / (r2 * r2 * r);
    case RadialShape::SchrodingerA1: return -beta / r2 + 4.0 * m * lambda / (r2 * r);
    case RadialShape::SchrodingerB0:
      return 2.0 * alpha * r - 2.0 * beta / (r2 * r) -
             2.0 * m * (-4.0 * lambda * lambda / (r2 * r2 * r) + 4.0 * delta * delta * r2 * r);
    case RadialShape::SchrodingerB1: return -2.0 * m * (-2.0 * lambda / (r2 * r) + 2.0 * delta * r);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------

ScalarProfile::ScalarProfile(ScalarKind kind, double alpha, double beta)
    : kind_(kind), alpha_(alpha), beta_(beta) {
  if (kind == ScalarKind::Tabulated) {
    throw Error(ErrorCode::ConfigError, "use ScalarProfile::tabulated for tables");
  }
}

ScalarProfile ScalarProfile::tabulated(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size() || x.size() < 4) {
    throw Error(ErrorCode::ConfigError, "tabulated profile needs >= 4 matching (x, y) points");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      throw Error(ErrorCode::ConfigError, "tabulated profile x must be strictly increasing");
    }
  }
  ScalarProfile p;
  p.kind_ = ScalarKind::Tabulated;
  p.tx_ = x;
  p.ty_ = y;
  p.spline_ = std::make_shared<const Spline>(std::move(x), std::move(y));
  return p;
}

void ScalarProfile::check_table_range(double x) const {
  if (x < tx_.front() || x > tx_.back()) {
    std::ostringstream os;
    os << "tabulated profile evaluated at " << x << " outside [" << tx_.front() << ", "
       << tx_.back() << "]";
    throw Error(ErrorCode::DomainError, os.str());
  }
}

double ScalarProfile::value(double x) const {
  switch (kind_) {
    case ScalarKind::Zero: return 0.0;
    case ScalarKind::Constant: return alpha_;
    case ScalarKind::Linear: return alpha_ * x;
    case ScalarKind::Inverse: return alpha_ / x;
    case ScalarKind::Exp: return alpha_ * std::exp(beta_ * x);
    case ScalarKind::Tan: return alpha_ * std::tan(beta_ * x);
    case ScalarKind::Tanh: return alpha_ * std::tanh(beta_ * x);
    case ScalarKind::Coth: return alpha_ / std::tanh(beta_ * x);
    case ScalarKind::SqrtAbs: return alpha_ * std::sqrt(std::abs(x));
    case ScalarKind::Gaussian: return alpha_ * std::exp(-beta_ * x * x);
    case ScalarKind::Tabulated:
      check_table_range(x);
      return (*spline_)(x);
  }
  return 0.0;
}

double ScalarProfile::derivative(double x) const {
  switch (kind_) {
    case ScalarKind::Zero:
    case ScalarKind::Constant: return 0.0;
    case ScalarKind::Linear: return alpha_;
    case ScalarKind::Inverse: return -alpha_ / (x * x);
    case ScalarKind::Exp: return alpha_ * beta_ * std::exp(beta_ * x);
    case ScalarKind::Tan: {
      const double c = std::cos(beta_ * x);
      return alpha_ * beta_ / (c * c);
    }
    case ScalarKind::Tanh: {
      const double c = std::cosh(beta_ * x);
      return alpha_ * beta_ / (c * c);
    }
    case ScalarKind::Coth: {
      const double s = std::sinh(beta_ * x);
      return -alpha_ * beta_ / (s * s);
    }
    case ScalarKind::SqrtAbs: {
      const double sgn = x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0);
      return alpha_ * sgn / (2.0 * std::sqrt(std::abs(x)));
    }
    case ScalarKind::Gaussian: return -2.0 * alpha_ * beta_ * x * std::exp(-beta_ * x * x);
    case ScalarKind::Tabulated:
      check_table_range(x);
      return spline_->prime(x);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I1: return "I.1";
    case CaseTag::I2: return "I.2";
    case CaseTag::I3: return "I.3";
    case CaseTag::II: return "II";
    case CaseTag::SchrodingerA: return "Schrodinger-a";
    case CaseTag::SchrodingerB: return "Schrodinger-b";
    case CaseTag::Spherical: return "Spherical";
  }
  return "?";
}

std::optional<CaseTag> case_tag_from_string(std::string_view s) {
  for (auto t : {CaseTag::I1, CaseTag::I2, CaseTag::I3, CaseTag::II, CaseTag::SchrodingerA,
                 CaseTag::SchrodingerB, CaseTag::Spherical}) {
    if (to_string(t) == s) return t;
  }
  if (s == "Schrödinger-a") return CaseTag::SchrodingerA;
  if (s == "Schrödinger-b") return CaseTag::SchrodingerB;
  return std::nullopt;
}

double axial_potential(const AxialProfile& p, PotentialRole role, double z, double x0) {
  switch (p.argument) {
    case AxialArgument::Z: return role == PotentialRole::F0 ? p.f.value(z) : 0.0;
    case AxialArgument::Time: return role == PotentialRole::F1 ? p.f.value(x0) : 0.0;
    case AxialArgument::Lightfront: return 0.5 * p.f.value(x0 - z);
    case AxialArgument::BoostInvariant: {
      const double xb = x0 * x0 - z * z;
      const double g = p.f.value(xb) / xb;
      return role == PotentialRole::F0 ? -z * g : x0 * g;
    }
  }
  return 0.0;
}

std::pair<double, double> axial_potential_gradient(const AxialProfile& p, PotentialRole role,
                                                   double z, double x0) {
  switch (p.argument) {
    case AxialArgument::Z:
      return {role == PotentialRole::F0 ? p.f.derivative(z) : 0.0, 0.0};
    case AxialArgument::Time:
      return {0.0, role == PotentialRole::F1 ? p.f.derivative(x0) : 0.0};
    case AxialArgument::Lightfront: {
      const double d = 0.5 * p.f.derivative(x0 - z);
      return {-d, d};
    }
    case AxialArgument::BoostInvariant: {
      const double xb = x0 * x0 - z * z;
      const double g = p.f.value(xb) / xb;
      const double gp = p.f.derivative(xb) / xb - p.f.value(xb) / (xb * xb);
      // d xb/dz = -2z, d xb/dx0 = 2 x0
      if (role == PotentialRole::F0) return {-g + 2.0 * z * z * gp, -2.0 * z * x0 * gp};
      return {-2.0 * z * x0 * gp, g + 2.0 * x0 * x0 * gp};
    }
  }
  return {0.0, 0.0};
}

FieldValues eval_cyl_fields(const FieldConfig& config, double r, double z, double x0) {
  if (!(r > 0.0)) throw Error(ErrorCode::DomainError, "cylindrical fields need r > 0");
  FieldValues out;
  out.H_z = config.f2.derivative(r) / r;
  auto radial_part = [&](const Potential& p, PotentialRole role) {
    if (const auto* rp = std::get_if<RadialProfile>(&p)) {
      if (role == PotentialRole::F0) {
        out.E_r += -rp->derivative(r);
      } else {
        out.H_phi += rp->derivative(r);
      }
    } else if (const auto* ap = std::get_if<AxialProfile>(&p)) {
      const auto [dz, d0] = axial_potential_gradient(*ap, role, z, x0);
      out.E_z += role == PotentialRole::F0 ? -dz : d0;
    } else {
      throw Error(ErrorCode::UnsupportedConfiguration,
                  "polar profile is only meaningful in spherical coordinates");
    }
  };
  radial_part(config.f0, PotentialRole::F0);
  radial_part(config.f1, PotentialRole::F1);
  return out;
}

FieldValues eval_sph_fields(const FieldConfig& config, double r, double theta) {
  if (!(r > 0.0)) throw Error(ErrorCode::DomainError, "spherical fields need r > 0");
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorCode::DomainError, "spherical fields undefined on the axis (monopole string)");
  }
  FieldValues out;
  if (const auto* rp = std::get_if<RadialProfile>(&config.f0)) {
    out.E_r = -rp->derivative(r);
  } else {
    throw Error(ErrorCode::UnsupportedConfiguration, "spherical f0 must be a radial profile");
  }
  if (const auto* pp = std::get_if<PolarProfile>(&config.f1)) {
    // d f1 / d(cos theta) = alpha
    out.H_r = -pp->alpha / (r * r);
  } else if (const auto* rp1 = std::get_if<RadialProfile>(&config.f1);
             !(rp1 && rp1->shape == RadialShape::Zero)) {
    throw Error(ErrorCode::UnsupportedConfiguration, "spherical f1 must be a polar profile");
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void reject(CaseTag tag, const std::string& what, const std::string& nearest) {
  throw Error(ErrorCode::UnsupportedConfiguration,
              std::string(to_string(tag)) + ": " + what + "; nearest supported pattern: " + nearest);
}

const RadialProfile* radial(const Potential& p) { return std::get_if<RadialProfile>(&p); }
const AxialProfile* axial(const Potential& p) { return std::get_if<AxialProfile>(&p); }

bool is_zero(const Potential& p) {
  if (const auto* r = radial(p)) return r->shape == RadialShape::Zero;
  if (const auto* a = axial(p)) return a->f.kind() == ScalarKind::Zero;
  return false;
}

bool has_shape(const Potential& p, RadialShape s) {
  const auto* r = radial(p);
  return r && r->shape == s;
}

bool same_scalar(const ScalarProfile& a, const ScalarProfile& b) {
  return a.kind() == b.kind() && a.alpha() == b.alpha() && a.beta() == b.beta() &&
         a.table_x() == b.table_x() && a.table_y() == b.table_y();
}

}  // namespace

FieldConfig validate_config(const FieldConfig& config) {
  FieldConfig out = config;
  const CaseTag tag = config.case_tag;
  if (!config.flux.nontrivial()) {
    throw Error(ErrorCode::NontrivialFluxRequired,
                "flux mantissa mu is zero; only a nontrivial AB field is supported");
  }
  const auto& f2 = config.f2;
  switch (tag) {
    case CaseTag::I1: {
      const std::string pat = "I.1 {f0 = alpha/r, f1 = 0, f2 = gamma r}";
      if (!has_shape(config.f0, RadialShape::InverseR)) reject(tag, "f0 must be InverseR", pat);
      if (!is_zero(config.f1)) reject(tag, "f1 must be Zero", pat);
      if (f2.shape != RadialShape::Linear) reject(tag, "f2 must be Linear", pat);
      break;
    }
    case CaseTag::I2: {
      const std::string pat = "I.2 {f0 = 0, f1 = alpha/r, f2 = gamma r}";
      if (!is_zero(config.f0)) reject(tag, "f0 must be Zero", pat);
      if (!has_shape(config.f1, RadialShape::InverseR)) reject(tag, "f1 must be InverseR", pat);
      if (f2.shape != RadialShape::Linear) reject(tag, "f2 must be Linear", pat);
      break;
    }
    case CaseTag::I3: {
      const std::string pat_a = "I.3a {f0 = eps f1 = alpha/r + beta/r^2, f2 = gamma r}";
      const std::string pat_b = "I.3b {f0 = eps f1 = alpha r^2 + beta/r^2, f2 = gamma r^2}";
      if (config.epsilon != 1 && config.epsilon != -1) reject(tag, "epsilon must be +-1", pat_a);
      const auto* a = radial(config.f0);
      const auto* b = radial(config.f1);
      if (!a || !b) reject(tag, "f0 and f1 must be radial", pat_a);
      const bool va = a->shape == RadialShape::InverseRPlusInverseR2;
      const bool vb = a->shape == RadialShape::R2PlusInverseR2;
      if (!va && !vb) reject(tag, "f0 must be InverseR_plus_InverseR2 or R2_plus_InverseR2", pat_a);
      const std::string& pat = va ? pat_a : pat_b;
      const double e = config.epsilon;
      if (b->shape != a->shape || b->alpha != e * a->alpha || b->beta != e * a->beta) {
        reject(tag, "f1 must equal epsilon * f0", pat);
      }
      if (va && f2.shape != RadialShape::Linear) reject(tag, "f2 must be Linear", pat);
      if (vb && f2.shape != RadialShape::Quadratic) reject(tag, "f2 must be Quadratic", pat);
      break;
    }
    case CaseTag::II: {
      const std::string pat =
          "II {f2 in {gamma r, gamma r^2}; f0/f1 axial: f0(z) | f1(x0) | lightfront | boost-invariant}";
      if (f2.shape != RadialShape::Linear && f2.shape != RadialShape::Quadratic) {
        reject(tag, "f2 must be Linear or Quadratic", pat);
      }
      const auto* a0 = axial(config.f0);
      const auto* a1 = axial(config.f1);
      const bool z0 = is_zero(config.f0);
      const bool z1 = is_zero(config.f1);
      if ((!a0 && !z0) || (!a1 && !z1)) reject(tag, "f0 and f1 must be axial profiles or Zero", pat);
      if (z0 && z1) break;
      if (a0 && a1 && !z0 && !z1) {
        if (a0->argument != a1->argument ||
            (a0->argument != AxialArgument::Lightfront && a0->argument != AxialArgument::BoostInvariant)) {
          reject(tag, "two nonzero axial potentials must share a lightfront or boost-invariant profile", pat);
        }
        if (!same_scalar(a0->f, a1->f)) reject(tag, "lightfront/boost f0 and f1 must share f", pat);
        break;
      }
      if (a0 && !z0 && a0->argument != AxialArgument::Z) reject(tag, "lone f0 must depend on z", pat);
      if (a1 && !z1 && a1->argument != AxialArgument::Time) reject(tag, "lone f1 must depend on x0", pat);
      break;
    }
    case CaseTag::SchrodingerA: {
      const std::string pat = "Schrodinger-a {f0, f1 mass-coupled family, f2 = gamma r}";
      const auto* a = radial(config.f0);
      const auto* b = radial(config.f1);
      if (!a || a->shape != RadialShape::SchrodingerA0) reject(tag, "f0 must be SchrodingerA_f0", pat);
      if (!b || b->shape != RadialShape::SchrodingerA1) reject(tag, "f1 must be SchrodingerA_f1", pat);
      if (a->beta != b->beta || a->lambda != b->lambda || a->mass != b->mass) {
        reject(tag, "f0 and f1 must share beta, lambda and mass", pat);
      }
      if (f2.shape != RadialShape::Linear) reject(tag, "f2 must be Linear", pat);
      break;
    }
    case CaseTag::SchrodingerB: {
      const std::string pat = "Schrodinger-b {f0, f1 mass-coupled family, f2 = gamma r^2}";
      const auto* a = radial(config.f0);
      const auto* b = radial(config.f1);
      if (!a || a->shape != RadialShape::SchrodingerB0) reject(tag, "f0 must be SchrodingerB_f0", pat);
      if (!b || b->shape != RadialShape::SchrodingerB1) reject(tag, "f1 must be SchrodingerB_f1", pat);
      if (a->delta != b->delta || a->lambda != b->lambda || a->mass != b->mass) {
        reject(tag, "f0 and f1 must share delta, lambda and mass", pat);
      }
      if (f2.shape != RadialShape::Quadratic) reject(tag, "f2 must be Quadratic", pat);
      break;
    }
    case CaseTag::Spherical: {
      const std::string pat = "Spherical {f0 = gamma/r (+ delta/r^2), f1 = alpha cos(theta) + beta}";
      const auto* a = radial(config.f0);
      if (!a || (a->shape != RadialShape::Zero && a->shape != RadialShape::InverseR &&
                 a->shape != RadialShape::InverseRPlusInverseR2)) {
        reject(tag, "f0 must be Zero, InverseR or InverseR_plus_InverseR2", pat);
      }
      if (!std::holds_alternative<PolarProfile>(config.f1) && !is_zero(config.f1)) {
        reject(tag, "f1 must be a polar profile", pat);
      }
      if (f2.shape != RadialShape::Zero) reject(tag, "f2 must be Zero", pat);
      break;
    }
  }
  return out;
}

}  // namespace abex
