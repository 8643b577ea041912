#include "danzer/d6_lift.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "danzer/construction_data.hpp"

namespace danzer {

SignedPermutation::SignedPermutation() : image_{0, 1, 2, 3, 4, 5}, sign_{1, 1, 1, 1, 1, 1} {}

SignedPermutation::SignedPermutation(std::array<int, 6> image, std::array<int, 6> sign)
    : image_(image), sign_(sign) {
  std::array<bool, 6> hit{};
  for (int i = 0; i < 6; ++i) {
    if (image_[i] < 0 || image_[i] > 5 || hit[image_[i]])
      throw std::invalid_argument("signed permutation images are not a bijection");
    if (sign_[i] != 1 && sign_[i] != -1) throw std::invalid_argument("signs must be +-1");
    hit[image_[i]] = true;
  }
}

D6Vector SignedPermutation::apply(const D6Vector& v) const {
  D6Vector out;
  for (int i = 0; i < 6; ++i) out[image_[i]] = sign_[i] * v[i];
  return out;
}

Eigen::Matrix<Golden, 6, 6> SignedPermutation::matrix() const {
  Eigen::Matrix<Golden, 6, 6> m = Eigen::Matrix<Golden, 6, 6>::Zero();
  for (int i = 0; i < 6; ++i) m(image_[i], i) = Golden(sign_[i]);
  return m;
}

SignedPermutation SignedPermutation::inverse() const {
  std::array<int, 6> im{}, sg{};
  for (int i = 0; i < 6; ++i) {
    im[image_[i]] = i;
    sg[image_[i]] = sign_[i];
  }
  return {im, sg};
}

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
  std::array<int, 6> im{}, sg{};
  for (int i = 0; i < 6; ++i) {
    im[i] = p.image_[q.image_[i]];
    sg[i] = q.sign_[i] * p.sign_[q.image_[i]];
  }
  return {im, sg};
}

std::string SignedPermutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < 6; ++i)
    os << (i ? " " : "") << i + 1 << "->" << (sign_[i] < 0 ? "-" : "") << image_[i] + 1;
  return os.str();
}

std::string to_string(const CycleConvention& c) {
  std::string bar = c.bar == BarRule::SignedElement ? "signed-element"
                    : c.bar == BarRule::OnSource    ? "bar-on-source"
                                                    : "bar-on-image";
  return bar + (c.direction == CycleDirection::Basis ? ", basis map" : ", inverse map");
}

std::array<CycleConvention, 6> all_cycle_conventions() {
  std::array<CycleConvention, 6> out;
  int k = 0;
  for (BarRule b : {BarRule::SignedElement, BarRule::OnSource, BarRule::OnImage})
    for (CycleDirection d : {CycleDirection::Basis, CycleDirection::Inverse}) out[k++] = {b, d};
  return out;
}

namespace {

std::vector<std::vector<int>> tokenize_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* cur = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '(') {
      if (cur) throw std::invalid_argument("nested parenthesis in cycle notation");
      cur = &cycles.emplace_back();
      ++i;
    } else if (ch == ')') {
      if (!cur || cur->empty()) throw std::invalid_argument("empty or unopened cycle");
      cur = nullptr;
      ++i;
    } else if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      if (!cur) throw std::invalid_argument("index outside a cycle");
      int sgn = 1;
      if (ch == '-') {
        sgn = -1;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bar without an index");
      const int v = text[i] - '0';
      if (v < 1 || v > 6) throw std::invalid_argument("index out of range 1..6");
      cur->push_back(sgn * v);
      ++i;
    } else if (ch == ' ' || ch == ',') {
      ++i;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch + "'");
    }
  }
  if (cur) throw std::invalid_argument("unclosed cycle");
  return cycles;
}

}  // namespace

SignedPermutation parse_cycles(std::string_view text, const CycleConvention& conv) {
  std::array<int, 6> image{-1, -1, -1, -1, -1, -1};
  std::array<int, 6> sign{};
  auto set = [&](int from, int to, int s) {
    if (image[from] >= 0 && (image[from] != to || sign[from] != s))
      throw std::invalid_argument("cycle notation assigns two images to one index");
    image[from] = to;
    sign[from] = s;
  };
  for (const auto& cyc : tokenize_cycles(text)) {
    const std::size_t k = cyc.size();
    for (std::size_t j = 0; j < k; ++j) {
      const int x = cyc[j];
      const int y = cyc[(j + 1) % k];
      const int sx = x < 0 ? -1 : 1;
      const int sy = y < 0 ? -1 : 1;
      const int s = conv.bar == BarRule::SignedElement ? sx * sy
                    : conv.bar == BarRule::OnSource    ? sx
                                                       : sy;
      set(std::abs(x) - 1, std::abs(y) - 1, s);
    }
  }
  for (int i = 0; i < 6; ++i)
    if (image[i] < 0) {
      image[i] = i;  // unlisted indices are fixed
      sign[i] = 1;
    }
  SignedPermutation p(image, sign);
  return conv.direction == CycleDirection::Basis ? p : p.inverse();
}

std::optional<SignedPermutation> signed_permutation_of(const Mat3& g) {
  const ProjectionBasis& b = projection_basis();
  std::array<int, 6> image{}, sign{};
  for (int i = 0; i < 6; ++i) {
    const Vec3 gu = g * b.par_row(i);
    bool found = false;
    for (int j = 0; j < 6 && !found; ++j) {
      if (gu == b.par_row(j)) {
        image[i] = j;
        sign[i] = 1;
        found = true;
      } else if (gu == Vec3(-b.par_row(j))) {
        image[i] = j;
        sign[i] = -1;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  try {
    return SignedPermutation(image, sign);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

D6Vector LiftTemplate::at(const PairM& p) const {
  D6Vector v;
  for (int i = 0; i < 6; ++i) v[i] = coef[i][0] * p.m1() + coef[i][1] * p.m2();
  return v;
}

std::string LiftTemplate::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 6; ++i) {
    os << (i ? ", " : "") << "(" << coef[i][0].get_str() << ")m1+(" << coef[i][1].get_str()
       << ")m2";
  }
  os << "]";
  return os.str();
}

namespace {

// Template from two l-combinations: m1 * u + m2 * w, scaled by k.
LiftTemplate tmpl(std::array<int, 6> u, std::array<int, 6> w, Rational k = 1) {
  LiftTemplate t;
  for (int i = 0; i < 6; ++i) t.coef[i] = {k * u[i], k * w[i]};
  return t;
}

LiftEntry rot_entry(std::string label, std::string printed, std::string resolved, Mat3 g) {
  return {std::move(label), LiftRotation{std::move(printed), std::move(resolved), std::move(g)},
          std::nullopt};
}

LiftEntry tr_entry(std::string label, LiftTemplate t, Vec3 t3) {
  return {std::move(label), std::nullopt, LiftTranslation{std::move(t), std::move(t3)}};
}

std::vector<LiftEntry> build_table() {
  using namespace data;
  const Rational h(1, 2);
  // Recurring l-patterns.
  const std::array<int, 6> alt{1, -1, 1, -1, 0, -1};  // l1 - l2 + l3 - l4 - l6
  const std::array<int, 6> l5{0, 0, 0, 0, 1, 0};
  const std::array<int, 6> odd{1, 0, 1, 0, 1, 0};      // l1 + l3 + l5
  const std::array<int, 6> even{0, 1, 0, -1, 0, -1};   // l2 - l4 - l6
  auto lin = [](std::array<int, 6> a, int ka, std::array<int, 6> b, int kb) {
    std::array<int, 6> r{};
    for (int i = 0; i < 6; ++i) r[i] = ka * a[i] + kb * b[i];
    return r;
  };

  const LiftTemplate t_k = tmpl({1, 1, 1, 1, 1, -1}, {5, 1, 1, 1, 1, -1}, h);
  const LiftTemplate t_4k = tmpl(l5, alt);
  const LiftTemplate t_b = tmpl(lin(l5, 3, alt, 1), lin(l5, 5, alt, 3), h);
  const LiftTemplate t_k2 = tmpl({1, 0, 0, 0, 1, 0}, {1, 0, 2, 0, 1, -2});
  const LiftTemplate t_c_pre = tmpl(lin(odd, 1, even, 1), lin(odd, 3, even, -1), -h);
  const LiftTemplate t_c_post = tmpl(odd, lin(odd, 2, even, 1));
  const LiftTemplate t_a = tmpl(lin(l5, 1, alt, 1), lin(l5, 5, alt, 1), h);

  return {
      rot_entry("tauK.g_K", "(1 -3 6)(2 4 -5)", "(1 -3 6)(2 4 -5)", tk_g_k()),
      tr_entry("tauK.t_K", t_k, tk_t_k()),

      rot_entry("tauB.g_B", "(3)(1 2 6 -4 5)", "(3)(1 2 6 -4 5)", tb_g_b()),
      rot_entry("tauB.g_4K", "(1)(2 3)(4 5)(6)", "(1)(2 3)(4 5)(6)", tb_g_4k()),
      tr_entry("tauB.t_4K", t_4k, tb_t_4k()),
      rot_entry("tauB.g_B1", "(1 6 4 3 -5)(2)", "(1 6 4 3 -5)(2)", tb_g_b1()),
      rot_entry("tauB.g_B2", "(1 5 -2 -1 -5 2),(3 -6 4 -3 6 4)",
                "(1 5 -2 -1 -5 2),(3 -6 -4 -3 6 4)", tb_g_b2()),
      tr_entry("tauB.t_B", t_b, tb_t_b()),

      rot_entry("tauC.g_K1", "(5 -4 6 2 1)(3)", "(1 2 6 -4 5)(3)", tc_g_k1()),
      rot_entry("tauC.g_K2", "(1 -1)(6 3 -4 5 -2 -6 -3 4 -5 2)",
                "(1 -1)(6 3 -4 5 -2 -6 -3 4 -5 2)", tc_g_k2()),
      tr_entry("tauC.t_K", t_k2, tc_t_k2()),
      tr_entry("tauC.t_C-", t_c_pre, tc_t_c_pre()),
      rot_entry("tauC.g_C1", "(1)(4)(2 -6)(3 5)", "(1)(4)(2 -6)(3 5)", tc_g_c1()),
      rot_entry("tauC.g_C2", "(1)(3 5 -6 4 2)", "(1)(3 5 -6 4 2)", tc_g_c2()),
      tr_entry("tauC.t_C+", t_c_post, tc_t_c_post()),
      rot_entry("tauC.g_A", "(1)(6)(2 3)(4 5)", "(1)(6)(2 3)(4 5)", tc_g_a()),
      tr_entry("tauC.t_A", t_a, tc_t_a()),

      tr_entry("tauA.t_C", t_c_pre, ta_t_c()),
      rot_entry("tauA.g_C", "(1 -1 (2 -4)(3 6)(5 -5))", "(1 -1)(2 -4)(3 6)(5 -5)", ta_g_c()),
      rot_entry("tauA.g_K1", "(1)(2 5 4 3 -6)", "(1)(2 5 4 3 -6)", ta_g_k1()),
      rot_entry("tauA.g_K2", "(1)(4)(2 -6)(3 5)", "(1)(4)(2 -6)(3 5)", ta_g_k2()),
      tr_entry("tauA.t_K", t_4k, ta_t_k()),
      rot_entry("tauA.g_B", "(6 5 -1 -6 -5 1),(4 -2 -3 4 2 3)",
                "(6 5 -1 -6 -5 1),(4 2 3 -4 -2 -3)", ta_g_b()),
      tr_entry("tauA.t_B", t_b, ta_t_b()),
  };
}

bool commutes(const SignedPermutation& p, const Mat3& g, bool perp) {
  const ProjectionBasis& b = projection_basis();
  Mat3 h = g;
  if (perp)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) h(r, c) = g(r, c).conjugate();
  for (int i = 0; i < 6; ++i) {
    const Vec3 lhs = perp ? b.perp_row(p.image(i)) : b.par_row(p.image(i));
    const Vec3 rhs = h * (perp ? b.perp_row(i) : b.par_row(i));
    if (Vec3(Golden(p.sign(i)) * lhs) != rhs) return false;
  }
  return true;
}

bool verify_with(const LiftEntry& e, const CycleConvention& conv, bool perp, bool printed) {
  if (!e.rotation) return false;
  try {
    const auto p = parse_cycles(printed ? e.rotation->printed : e.rotation->resolved, conv);
    return commutes(p, e.rotation->g, perp);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

const std::vector<LiftEntry>& lift_table() {
  static const std::vector<LiftEntry> table = build_table();
  return table;
}

int commuting_entries(const CycleConvention& conv, bool use_printed) {
  int n = 0;
  for (const auto& e : lift_table())
    if (e.rotation && verify_with(e, conv, false, use_printed)) ++n;
  return n;
}

std::optional<CycleConvention> discover_convention() {
  int rotations = 0;
  for (const auto& e : lift_table()) rotations += e.rotation ? 1 : 0;
  std::optional<CycleConvention> found;
  for (const auto& conv : all_cycle_conventions()) {
    if (commuting_entries(conv) != rotations) continue;
    if (found) return std::nullopt;
    found = conv;
  }
  return found;
}

bool verify_lift_rotation(const LiftEntry& entry, const CycleConvention& conv) {
  return verify_with(entry, conv, false, false);
}

bool verify_lift_rotation_perp(const LiftEntry& entry, const CycleConvention& conv) {
  return verify_with(entry, conv, true, false);
}

bool verify_lift_translation(const LiftEntry& entry, const PairM& p) {
  if (!entry.translation) return false;
  const Projection pr = project(entry.translation->lattice.at(p));
  const Golden c2 = Golden(2) * scale_factor(p).golden_part;
  return pr.par == Vec3(c2 * entry.translation->t3);
}

}  // namespace danzer
