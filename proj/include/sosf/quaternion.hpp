#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sosf/field.hpp"

namespace sosf::quat {

/// Rational quaternion in the basis q0 = 1, q1 = i, q2 = j, q3 = k.
/// These are quaternion units, distinct from the scalar i of QQ(i); the two
/// never convert into each other.
struct Quaternion {
  std::array<Rational, 4> c{};

  static Quaternion basis(int t);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator*(const Rational& c, const Quaternion& a);

Quaternion conj(const Quaternion& a);
/// tau(q) = j q (-j); an involutive algebra automorphism.
Quaternion tau(const Quaternion& a);
Rational re(const Quaternion& a);

/// (u, v)_+ = Re(u conj(v)); Gram matrix I_4 on the basis.
Rational form_plus(const Quaternion& a, const Quaternion& b);
/// (u, v)_- = -Re(u v); Gram matrix diag(-1, 1, 1, 1) on the basis.
Rational form_minus(const Quaternion& a, const Quaternion& b);
Rational norm(const Quaternion& a);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// A signed basis quaternion, sign * q_t. Products, conjugates and tau images
/// of signed basis elements stay in this set, so the whole template layer is
/// integer bookkeeping.
struct TemplateEntry {
  int sign;  // +1 or -1
  int t;     // 0..3

  friend bool operator==(const TemplateEntry&, const TemplateEntry&) = default;

  Quaternion quaternion() const;
  std::string str() const;
};

TemplateEntry entry_mul(TemplateEntry a, TemplateEntry b);
TemplateEntry entry_conj(TemplateEntry a);
TemplateEntry entry_tau(TemplateEntry a);
TemplateEntry entry_neg(TemplateEntry a);
int entry_form_plus(TemplateEntry a, TemplateEntry b);
int entry_form_minus(TemplateEntry a, TemplateEntry b);

std::ostream& operator<<(std::ostream& os, const TemplateEntry& e);

enum class TemplateName { D, P, Pt, Y, Z, S };

std::string template_name_str(TemplateName name);
std::optional<TemplateName> template_name_parse(const std::string& text);

/// The canonical order used everywhere a template alphabet is enumerated.
inline constexpr std::array<TemplateName, 6> kTemplateOrder = {
    TemplateName::D, TemplateName::P, TemplateName::Pt,
    TemplateName::Y, TemplateName::Z, TemplateName::S};

/// A 4x4 grid of signed basis quaternions, indexed by a, b in 0..3.
struct Template {
  TemplateName name;
  std::array<std::array<TemplateEntry, 4>, 4> entry;

  const TemplateEntry& at(int a, int b) const { return entry[a][b]; }
};

/// The six templates as literal grids (Pt is the transpose of the P grid),
/// in the order D, P, Pt, Y, Z, S.
const std::array<Template, 6>& templates();
const Template& template_by_name(TemplateName name);

/// Entry (a, b) computed from the closed quaternionic expressions:
///   D_ab = conj(q_a) q_b      P_ab  = q_b conj(q_a)   Pt_ab = q_a conj(q_b)
///   S_ab = tau(q_b conj(q_a)) Y_ab  = tau(q_a) q_b    Z_ab  = -tau(q_b) q_a
TemplateEntry template_entry_formula(TemplateName name, int a, int b);

struct TemplateMismatch {
  TemplateName name;
  int a, b;
  TemplateEntry literal;
  TemplateEntry formula;
};

struct TemplateCheckReport {
  long long checked = 0;
  std::vector<TemplateMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Compares every literal grid entry against its formula value.
TemplateCheckReport check_templates();
TemplateCheckReport check_templates(std::span<const Template> grids);

struct IdentityFamilyReport {
  std::string family;
  long long checked = 0;
  long long failures = 0;
};

struct LemmaCheckReport {
  std::vector<IdentityFamilyReport> families;
  long long total_checked() const;
  long long total_failures() const;
  bool pass() const { return total_failures() == 0; }
};

/// Exhaustive verification, over all basis index quadruples, of
///   (M_ab, M_cd)+ + (M_ad, M_cb)+ = 2 delta_ac delta_bd   (all six templates)
///   (D_ab, D_cd)- + (P_ad, P_bc)+ = 0
///   (D_ab, S_cd)+ + (Y_ad, Z_cb)+ = 0
/// together with the twisted identity
///   (conj(x) y, tau(w conj(z)))+ = (tau(x) w, tau(y) z)+
/// on all basis quadruples.
LemmaCheckReport check_lemma_identities();

/// The bilinear map whose coefficient array is the named template:
///   mu_D = conj(x) y, mu_P = y conj(x), mu_Pt = x conj(y),
///   mu_S = tau(y conj(x)), mu_Y = tau(x) y, mu_Z = -tau(y) x.
Quaternion template_map(TemplateName name, const Quaternion& x, const Quaternion& y);

/// Whether N(mu_M(x, y)) = N(x) N(y) for the named map.
bool norm_multiplicative(TemplateName name, const Quaternion& x, const Quaternion& y);

}  // namespace sosf::quat
