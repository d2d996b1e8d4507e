#include "courantx/suites.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "courantx/atiyah.hpp"
#include "courantx/connection.hpp"
#include "courantx/ctl.hpp"
#include "courantx/marked.hpp"
#include "courantx/sampler.hpp"

namespace courantx {

namespace {

using Cx = std::optional<std::string>;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

bool odd(int d) { return d % 2 != 0; }

template <typename T>
T neg_if(bool neg, T v) {
  return neg ? -v : v;
}

// Sign operator (-1)^deg applied gradewise; the Koszul cost of moving an odd
// symbol across the form.
Form form_parity(const Form& w) {
  Form r(w.chart_dim());
  for (int d : w.degrees()) r += neg_if(odd(d), w.graded_part(d));
  return r;
}

// Parity of a superfunction: the eps factor shifts the odd slot down by one.
SuperFunc sf_parity(const SuperFunc& a) {
  return SuperFunc(form_parity(a.even), -form_parity(a.odd));
}

std::vector<Poly> unit_section(int n, int rank, int i) {
  std::vector<Poly> e(rank, Poly(n));
  e[i] = Poly::constant(n, 1);
  return e;
}

std::vector<Poly> scale_section(const Poly& f, const std::vector<Poly>& u) {
  std::vector<Poly> r = u;
  for (Poly& p : r) p = f * p;
  return r;
}

// Collects per-property outcomes for one suite. Each property gets its own
// deterministic sample stream derived from (seed, suite, property position),
// so extending one property never reshuffles the draws of another.
class SuiteBuilder {
 public:
  using Body = std::function<Cx(Sampler&)>;

  SuiteBuilder(std::string name, const SuiteConfig& cfg) : cfg_(cfg) {
    result_.suite = std::move(name);
    tag_ = fnv1a(result_.suite);
  }

  Sampler stream() { return Sampler::for_property(cfg_.seed, tag_, index_++); }

  void prop(const std::string& name, const std::string& id, const Body& body,
            int count = 0) {
    PropertyResult pr;
    pr.name = name;
    pr.id = id;
    const int total = count > 0 ? count : cfg_.samples;
    Sampler s = stream();
    for (int i = 0; i < total; ++i) {
      Cx cx;
      try {
        cx = body(s);
      } catch (const std::exception& e) {
        cx = std::string("unexpected exception: ") + e.what();
      }
      ++pr.samples;
      if (cx) {
        ++pr.failures;
        if (!pr.counterexample)
          pr.counterexample = "sample " + std::to_string(i) + ": " + *cx;
      }
    }
    result_.properties.push_back(std::move(pr));
  }

  // One-shot deterministic property.
  void check(const std::string& name, const std::string& id, const Body& body) {
    prop(name, id, body, 1);
  }

  void add(PropertyResult pr) { result_.properties.push_back(std::move(pr)); }

  const SuiteConfig& cfg() const { return cfg_; }
  SuiteResult take() { return std::move(result_); }

 private:
  const SuiteConfig& cfg_;
  SuiteResult result_;
  std::uint64_t tag_ = 0;
  std::uint64_t index_ = 0;
};

std::string diff_str(const std::string& label, const Form& lhs, const Form& rhs) {
  return label + ": lhs = " + lhs.str() + "; rhs = " + rhs.str();
}

// ---------------------------------------------------------------------------
// cartan: the exterior calculus identities everything else leans on.

SuiteResult run_cartan(const SuiteConfig& cfg) {
  SuiteBuilder b("cartan", cfg);
  const int n = cfg.chart_dim;
  const int md = cfg.max_poly_degree;

  b.prop("exterior differential squares to zero", "cartan.d_squared",
         [=](Sampler& s) -> Cx {
           Form w = s.mixed_form(n, 0, n, md);
           Form r = de_rham(de_rham(w));
           if (r.is_zero()) return std::nullopt;
           return "w = " + w.str() + "; d(dw) = " + r.str();
         });

  b.prop("differential is a graded derivation of the wedge", "cartan.d_leibniz",
         [=](Sampler& s) -> Cx {
           const int p = s.below(n + 1);
           Form a = s.form(n, p, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = de_rham(wedge(a, w));
           Form rhs = wedge(de_rham(a), w) + neg_if(odd(p), wedge(a, de_rham(w)));
           if (lhs == rhs) return std::nullopt;
           return "a = " + a.str() + "; w = " + w.str() + "; " +
                  diff_str("d(a^w)", lhs, rhs);
         });

  b.prop("wedge is graded commutative", "cartan.wedge_graded_commutative",
         [=](Sampler& s) -> Cx {
           const int p = s.below(n + 1);
           const int q = s.below(n + 1);
           Form a = s.form(n, p, md);
           Form c = s.form(n, q, md);
           Form lhs = wedge(a, c);
           Form rhs = neg_if(odd(p) && odd(q), wedge(c, a));
           if (lhs == rhs) return std::nullopt;
           return "a = " + a.str() + "; b = " + c.str() + "; " +
                  diff_str("a^b vs sign b^a", lhs, rhs);
         });

  b.prop("wedge is associative", "cartan.wedge_associative",
         [=](Sampler& s) -> Cx {
           Form a = s.mixed_form(n, 0, n, md);
           Form c = s.mixed_form(n, 0, n, md);
           Form e = s.mixed_form(n, 0, n, md);
           Form lhs = wedge(wedge(a, c), e);
           Form rhs = wedge(a, wedge(c, e));
           if (lhs == rhs) return std::nullopt;
           return diff_str("(a^b)^c vs a^(b^c)", lhs, rhs);
         });

  b.prop("contraction is a graded antiderivation", "cartan.interior_antiderivation",
         [=](Sampler& s) -> Cx {
           VectorField v = s.vector_field(n, md);
           const int p = s.below(n + 1);
           Form a = s.form(n, p, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = interior(v, wedge(a, w));
           Form rhs =
               wedge(interior(v, a), w) + neg_if(odd(p), wedge(a, interior(v, w)));
           if (lhs == rhs) return std::nullopt;
           return "v = " + v.str() + "; a = " + a.str() + "; w = " + w.str() +
                  "; " + diff_str("i_v(a^w)", lhs, rhs);
         });

  b.prop("repeated contraction along one field vanishes", "cartan.interior_squared",
         [=](Sampler& s) -> Cx {
           VectorField v = s.vector_field(n, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form r = interior(v, interior(v, w));
           if (r.is_zero()) return std::nullopt;
           return "v = " + v.str() + "; w = " + w.str() + "; i_v i_v w = " + r.str();
         });

  b.prop("Lie derivative commutes with the differential", "cartan.lie_d_commute",
         [=](Sampler& s) -> Cx {
           VectorField v = s.vector_field(n, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = lie_derivative(v, de_rham(w));
           Form rhs = de_rham(lie_derivative(v, w));
           if (lhs == rhs) return std::nullopt;
           return "v = " + v.str() + "; w = " + w.str() + "; " +
                  diff_str("L_v dw vs d L_v w", lhs, rhs);
         });

  b.prop("Lie derivative is a wedge derivation", "cartan.lie_wedge_leibniz",
         [=](Sampler& s) -> Cx {
           VectorField v = s.vector_field(n, md);
           Form a = s.mixed_form(n, 0, n, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = lie_derivative(v, wedge(a, w));
           Form rhs = wedge(lie_derivative(v, a), w) + wedge(a, lie_derivative(v, w));
           if (lhs == rhs) return std::nullopt;
           return diff_str("L_v(a^w)", lhs, rhs);
         });

  b.prop("Lie derivative along a scaled field", "cartan.lie_function_scaling",
         [=](Sampler& s) -> Cx {
           VectorField v = s.vector_field(n, md);
           Poly f = s.poly(n, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = lie_derivative(f * v, w);
           Form rhs = f * lie_derivative(v, w) +
                      wedge(de_rham(Form::from_poly(f)), interior(v, w));
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; v = " + v.str() + "; w = " + w.str() +
                  "; " + diff_str("L_{fv} w", lhs, rhs);
         });

  b.prop("contraction along a field bracket", "cartan.interior_bracket",
         [=](Sampler& s) -> Cx {
           VectorField v = s.vector_field(n, md);
           VectorField u = s.vector_field(n, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = interior(vf_bracket(v, u), w);
           Form rhs = lie_derivative(v, interior(u, w)) -
                      interior(u, lie_derivative(v, w));
           if (lhs == rhs) return std::nullopt;
           return "v = " + v.str() + "; u = " + u.str() + "; " +
                  diff_str("i_{[v,u]} w", lhs, rhs);
         });

  b.prop("Lie derivative along a field bracket", "cartan.lie_bracket_commutator",
         [=](Sampler& s) -> Cx {
           VectorField v = s.vector_field(n, md);
           VectorField u = s.vector_field(n, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = lie_derivative(vf_bracket(v, u), w);
           Form rhs = lie_derivative(v, lie_derivative(u, w)) -
                      lie_derivative(u, lie_derivative(v, w));
           if (lhs == rhs) return std::nullopt;
           return "v = " + v.str() + "; u = " + u.str() + "; " +
                  diff_str("L_{[v,u]} w", lhs, rhs);
         });

  b.prop("field bracket satisfies Jacobi", "cartan.vf_jacobi",
         [=](Sampler& s) -> Cx {
           VectorField u = s.vector_field(n, md);
           VectorField v = s.vector_field(n, md);
           VectorField t = s.vector_field(n, md);
           VectorField r = vf_bracket(vf_bracket(u, v), t) +
                           vf_bracket(vf_bracket(v, t), u) +
                           vf_bracket(vf_bracket(t, u), v);
           if (r.is_zero()) return std::nullopt;
           return "u = " + u.str() + "; v = " + v.str() + "; t = " + t.str() +
                  "; cyclic sum = " + r.str();
         });

  return b.take();
}

// ---------------------------------------------------------------------------
// oddpath: functions on the odd line and the two-slot module calculus.

SuiteResult run_oddpath(const SuiteConfig& cfg) {
  SuiteBuilder b("oddpath", cfg);
  const int n = cfg.chart_dim;
  const int md = cfg.max_poly_degree;

  auto draw_sf = [=](Sampler& s) {
    return SuperFunc(s.mixed_form(n, 0, n, md), s.mixed_form(n, 0, n, md));
  };

  b.prop("evaluation pullback is multiplicative", "oddpath.ev_multiplicative",
         [=](Sampler& s) -> Cx {
           Poly f = s.poly(n, md), g = s.poly(n, md);
           SuperFunc lhs = ev_pullback(f * g);
           SuperFunc rhs = super_mul(ev_pullback(f), ev_pullback(g));
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; g = " + g.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("graded product is associative", "oddpath.super_mul_associative",
         [=, &draw_sf](Sampler& s) -> Cx {
           SuperFunc a = draw_sf(s), c = draw_sf(s), e = draw_sf(s);
           SuperFunc lhs = super_mul(super_mul(a, c), e);
           SuperFunc rhs = super_mul(a, super_mul(c, e));
           if (lhs == rhs) return std::nullopt;
           return "lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("odd differential squares to zero", "oddpath.super_diff_squared",
         [=, &draw_sf](Sampler& s) -> Cx {
           SuperFunc a = draw_sf(s);
           SuperFunc r = super_diff(super_diff(a));
           if (r.is_zero()) return std::nullopt;
           return "a = " + a.str() + "; dd a = " + r.str();
         });

  b.prop("odd differential is a graded derivation", "oddpath.super_diff_leibniz",
         [=, &draw_sf](Sampler& s) -> Cx {
           SuperFunc a = draw_sf(s), c = draw_sf(s);
           SuperFunc lhs = super_diff(super_mul(a, c));
           SuperFunc rhs = super_mul(super_diff(a), c) +
                           super_mul(sf_parity(a), super_diff(c));
           if (lhs == rhs) return std::nullopt;
           return "a = " + a.str() + "; b = " + c.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("evaluation pullbacks are closed", "oddpath.ev_closed",
         [=](Sampler& s) -> Cx {
           Poly f = s.poly(n, md);
           SuperFunc r = super_diff(ev_pullback(f));
           if (r.is_zero()) return std::nullopt;
           return "f = " + f.str() + "; d(ev f) = " + r.str();
         });

  b.prop("fibre integration of a pullback is a differential",
         "oddpath.integrate_ev_chain", [=](Sampler& s) -> Cx {
           Poly f = s.poly(n, md);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = integrate(ev_pullback(f), w);
           Form rhs = de_rham(f * w);
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; w = " + w.str() + "; " +
                  diff_str("integral", lhs, rhs);
         });

  b.prop("fibre integration is a chain map", "oddpath.integrate_diff_chain",
         [=, &draw_sf](Sampler& s) -> Cx {
           SuperFunc a = draw_sf(s);
           Form w = s.mixed_form(n, 0, n, md);
           Form lhs = integrate(super_diff(a), w);
           Form rhs = de_rham(integrate(a, w));
           if (lhs == rhs) return std::nullopt;
           return "a = " + a.str() + "; w = " + w.str() + "; " +
                  diff_str("chain", lhs, rhs);
         });

  b.prop("plain slot balancing relation", "oddpath.prev_balance_plain",
         [=](Sampler& s) -> Cx {
           const int r = s.int_in(1, 3);
           const int i = s.below(r);
           Form w = s.mixed_form(n, 0, n, md);
           Poly f = s.poly(n, md);
           std::vector<PrevRawTerm> one_term(1);
           one_term[0].coeff = SuperFunc(w, Form(n));
           one_term[0].section = scale_section(f, unit_section(n, r, i));
           PrEvElement lhs = prev_normalize(n, r, one_term);
           std::vector<PrevRawTerm> two(2);
           two[0].coeff = SuperFunc(f * w, Form(n));
           two[0].section = unit_section(n, r, i);
           two[1].coeff = SuperFunc(Form(n), wedge(w, de_rham(Form::from_poly(f))));
           two[1].section = unit_section(n, r, i);
           PrEvElement rhs = prev_normalize(n, r, two);
           if (lhs == rhs) return std::nullopt;
           return "w = " + w.str() + "; f = " + f.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("eps slot balancing relation", "oddpath.prev_balance_eps",
         [=](Sampler& s) -> Cx {
           const int r = s.int_in(1, 3);
           const int i = s.below(r);
           Form w = s.mixed_form(n, 0, n, md);
           Poly f = s.poly(n, md);
           std::vector<PrevRawTerm> one_term(1);
           one_term[0].coeff = SuperFunc(Form(n), w);
           one_term[0].section = scale_section(f, unit_section(n, r, i));
           PrEvElement lhs = prev_normalize(n, r, one_term);
           std::vector<PrevRawTerm> other(1);
           other[0].coeff = SuperFunc(Form(n), f * w);
           other[0].section = unit_section(n, r, i);
           PrEvElement rhs = prev_normalize(n, r, other);
           if (lhs == rhs) return std::nullopt;
           return "w = " + w.str() + "; f = " + f.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("module differential squares to zero", "oddpath.prev_diff_squared",
         [=](Sampler& s) -> Cx {
           const int r = s.int_in(1, 3);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement out = prev_diff(prev_diff(m));
           if (out.is_zero()) return std::nullopt;
           return "m = " + m.str() + "; dd m = " + out.str();
         });

  b.prop("module differential descends through balancing",
         "oddpath.prev_diff_descends", [=, &draw_sf](Sampler& s) -> Cx {
           const int r = s.int_in(1, 3);
           const int i = s.below(r);
           SuperFunc a = draw_sf(s);
           Poly f = s.poly(n, md);
           std::vector<PrevRawTerm> raw(1);
           raw[0].coeff = a;
           raw[0].section = scale_section(f, unit_section(n, r, i));
           PrEvElement lhs = prev_diff(prev_normalize(n, r, raw));
           raw[0].coeff = super_diff(a);
           PrEvElement rhs = prev_normalize(n, r, raw);
           if (lhs == rhs) return std::nullopt;
           return "a = " + a.str() + "; f = " + f.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("scalar action composes through the wedge", "oddpath.prev_scalar_compose",
         [=](Sampler& s) -> Cx {
           const int r = s.int_in(1, 3);
           PrEvElement m = s.prev_elem(n, r, md);
           Form a = s.mixed_form(n, 0, n, md);
           Form c = s.mixed_form(n, 0, n, md);
           PrEvElement lhs = prev_scalar(a, prev_scalar(c, m));
           PrEvElement rhs = prev_scalar(wedge(a, c), m);
           if (lhs == rhs) return std::nullopt;
           return "a = " + a.str() + "; b = " + c.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("module differential is a graded derivation over forms",
         "oddpath.prev_diff_leibniz", [=](Sampler& s) -> Cx {
           const int r = s.int_in(1, 3);
           PrEvElement m = s.prev_elem(n, r, md);
           Form w = s.mixed_form(n, 0, n, md);
           PrEvElement lhs = prev_diff(prev_scalar(w, m));
           PrEvElement rhs = prev_scalar(de_rham(w), m) +
                             prev_scalar(form_parity(w), prev_diff(m));
           if (lhs == rhs) return std::nullopt;
           return "w = " + w.str() + "; m = " + m.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  return b.take();
}

// ---------------------------------------------------------------------------
// sharp: extended bracket calculus over sample Lie algebroids.

SuiteResult run_sharp(const SuiteConfig& cfg) {
  SuiteBuilder b("sharp", cfg);
  const int md = cfg.max_poly_degree;
  const std::vector<LieAlgebroidStructure> samples = {
      tangent_algebroid(2), so3_action_algebroid(), solvable_rank2_algebroid()};

  b.check("sample algebroid structures are consistent", "sharp.structures_valid",
          [&](Sampler&) -> Cx {
            for (const auto& a : samples) a.self_check();
            return std::nullopt;
          });

  auto draw_atom = [md](Sampler& s, const LieAlgebroidStructure& a) {
    SharpRawAtom t;
    t.coeff = s.form(a.n, s.below(a.n + 1), md);
    t.is_eps = s.below(2) == 0;
    t.section = s.section(a.n, a.rank, md);
    return t;
  };

  // Homogeneous normal-form element together with its degree.
  auto draw_hom = [md](Sampler& s, const LieAlgebroidStructure& a)
      -> std::optional<std::pair<PrEvElement, int>> {
    PrEvElement m = s.prev_elem(a.n, a.rank, md);
    auto degs = m.element_degrees();
    if (degs.empty()) return std::nullopt;
    int d = degs[s.below(static_cast<int>(degs.size()))];
    return std::make_pair(m.graded_part(d), d);
  };

  b.prop("bracket respects plain balancing in the left slot",
         "sharp.well_defined_plain_left", [&, md](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           Form w = s.form(a.n, s.below(a.n + 1), md);
           Poly f = s.poly(a.n, md);
           std::vector<Poly> u = s.section(a.n, a.rank, md);
           SharpRawAtom y = draw_atom(s, a);
           PrEvElement lhs =
               sharp_bracket_atoms(a, {w, false, scale_section(f, u)}, y);
           PrEvElement rhs =
               sharp_bracket_atoms(a, {f * w, false, u}, y) +
               sharp_bracket_atoms(
                   a, {wedge(w, de_rham(Form::from_poly(f))), true, u}, y);
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; w = " + w.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("bracket respects eps balancing in the left slot",
         "sharp.well_defined_eps_left", [&, md](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           Form w = s.form(a.n, s.below(a.n + 1), md);
           Poly f = s.poly(a.n, md);
           std::vector<Poly> u = s.section(a.n, a.rank, md);
           SharpRawAtom y = draw_atom(s, a);
           PrEvElement lhs =
               sharp_bracket_atoms(a, {w, true, scale_section(f, u)}, y);
           PrEvElement rhs = sharp_bracket_atoms(a, {f * w, true, u}, y);
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; w = " + w.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("bracket respects balancing in the right slot",
         "sharp.well_defined_right", [&, md](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           SharpRawAtom x = draw_atom(s, a);
           Form w = s.form(a.n, s.below(a.n + 1), md);
           Poly f = s.poly(a.n, md);
           std::vector<Poly> u = s.section(a.n, a.rank, md);
           PrEvElement lhs_p =
               sharp_bracket_atoms(a, x, {w, false, scale_section(f, u)});
           PrEvElement rhs_p =
               sharp_bracket_atoms(a, x, {f * w, false, u}) +
               sharp_bracket_atoms(
                   a, x, {wedge(w, de_rham(Form::from_poly(f))), true, u});
           if (!(lhs_p == rhs_p))
             return "plain slot: f = " + f.str() + "; lhs = " + lhs_p.str() +
                    "; rhs = " + rhs_p.str();
           PrEvElement lhs_e =
               sharp_bracket_atoms(a, x, {w, true, scale_section(f, u)});
           PrEvElement rhs_e = sharp_bracket_atoms(a, x, {f * w, true, u});
           if (!(lhs_e == rhs_e))
             return "eps slot: f = " + f.str() + "; lhs = " + lhs_e.str() +
                    "; rhs = " + rhs_e.str();
           return std::nullopt;
         });

  b.prop("bracket is graded antisymmetric", "sharp.graded_skew",
         [&](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           auto hx = draw_hom(s, a), hy = draw_hom(s, a);
           if (!hx || !hy) return std::nullopt;
           PrEvElement r =
               sharp_bracket(a, hx->first, hy->first) +
               neg_if(odd(hx->second) && odd(hy->second),
                      sharp_bracket(a, hy->first, hx->first));
           if (r.is_zero()) return std::nullopt;
           return "x = " + hx->first.str() + "; y = " + hy->first.str() +
                  "; symmetric part = " + r.str();
         });

  b.prop("bracket satisfies the graded Jacobi identity", "sharp.graded_jacobi",
         [&](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           auto hx = draw_hom(s, a), hy = draw_hom(s, a), hz = draw_hom(s, a);
           if (!hx || !hy || !hz) return std::nullopt;
           PrEvElement lhs =
               sharp_bracket(a, hx->first, sharp_bracket(a, hy->first, hz->first));
           PrEvElement rhs =
               sharp_bracket(a, sharp_bracket(a, hx->first, hy->first), hz->first) +
               neg_if(odd(hx->second) && odd(hy->second),
                      sharp_bracket(a, hy->first,
                                    sharp_bracket(a, hx->first, hz->first)));
           if (lhs == rhs) return std::nullopt;
           return "x = " + hx->first.str() + "; y = " + hy->first.str() +
                  "; z = " + hz->first.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("bracket is a first-order operator over forms", "sharp.leibniz_scalar",
         [&, md](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           auto hx = draw_hom(s, a);
           if (!hx) return std::nullopt;
           const int p = s.below(a.n + 1);
           Form w = s.form(a.n, p, md);
           PrEvElement y = s.prev_elem(a.n, a.rank, md);
           PrEvElement lhs = sharp_bracket(a, hx->first, prev_scalar(w, y));
           PrEvElement rhs =
               prev_scalar(sharp_act(a, hx->first, w), y) +
               neg_if(odd(hx->second) && odd(p),
                      prev_scalar(w, sharp_bracket(a, hx->first, y)));
           if (lhs == rhs) return std::nullopt;
           return "x = " + hx->first.str() + "; w = " + w.str() +
                  "; y = " + y.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("anchor pushforward is a bracket morphism", "sharp.anchor_morphism",
         [&](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           LieAlgebroidStructure tg = tangent_algebroid(a.n);
           PrEvElement x = s.prev_elem(a.n, a.rank, md);
           PrEvElement y = s.prev_elem(a.n, a.rank, md);
           PrEvElement lhs = sharp_anchor(a, sharp_bracket(a, x, y));
           PrEvElement rhs =
               sharp_bracket(tg, sharp_anchor(a, x), sharp_anchor(a, y));
           if (lhs == rhs) return std::nullopt;
           return "x = " + x.str() + "; y = " + y.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("form action factors through the anchor", "sharp.anchor_action",
         [&](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           LieAlgebroidStructure tg = tangent_algebroid(a.n);
           PrEvElement m = s.prev_elem(a.n, a.rank, md);
           Form w = s.mixed_form(a.n, 0, a.n, md);
           Form lhs = sharp_act(a, m, w);
           Form rhs = sharp_act(tg, sharp_anchor(a, m), w);
           if (lhs == rhs) return std::nullopt;
           return "m = " + m.str() + "; w = " + w.str() + "; " +
                  diff_str("action", lhs, rhs);
         });

  b.prop("form action is a graded derivation", "sharp.act_derivation",
         [&, md](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           auto hm = draw_hom(s, a);
           if (!hm) return std::nullopt;
           const int p = s.below(a.n + 1);
           Form u = s.form(a.n, p, md);
           Form w = s.mixed_form(a.n, 0, a.n, md);
           Form lhs = sharp_act(a, hm->first, wedge(u, w));
           Form rhs = wedge(sharp_act(a, hm->first, u), w) +
                      neg_if(odd(hm->second) && odd(p),
                             wedge(u, sharp_act(a, hm->first, w)));
           if (lhs == rhs) return std::nullopt;
           return "m = " + hm->first.str() + "; u = " + u.str() +
                  "; w = " + w.str() + "; " + diff_str("action", lhs, rhs);
         });

  b.prop("action of a bracket is the graded commutator", "sharp.act_commutator",
         [&](Sampler& s) -> Cx {
           const auto& a = samples[s.below(3)];
           auto hx = draw_hom(s, a), hy = draw_hom(s, a);
           if (!hx || !hy) return std::nullopt;
           Form w = s.mixed_form(a.n, 0, a.n, md);
           Form lhs = sharp_act(a, sharp_bracket(a, hx->first, hy->first), w);
           Form rhs = sharp_act(a, hx->first, sharp_act(a, hy->first, w)) -
                      neg_if(odd(hx->second) && odd(hy->second),
                             sharp_act(a, hy->first, sharp_act(a, hx->first, w)));
           if (lhs == rhs) return std::nullopt;
           return "x = " + hx->first.str() + "; y = " + hy->first.str() +
                  "; w = " + w.str() + "; " + diff_str("commutator", lhs, rhs);
         });

  return b.take();
}

// ---------------------------------------------------------------------------
// atiyah: first-order operators and their extended calculus.

SuiteResult run_atiyah(const SuiteConfig& cfg) {
  SuiteBuilder b("atiyah", cfg);
  const int n = cfg.chart_dim;
  const int md = cfg.max_poly_degree;
  const int r = 2;

  auto draw_op = [=](Sampler& s) {
    std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r, Poly(n)));
    for (auto& row : m)
      for (auto& e : row)
        if (s.below(2) == 0) e = s.poly(n, md);
    return AtiyahOperator(s.vector_field(n, md), std::move(m));
  };

  auto draw_hom = [=](Sampler& s) -> std::optional<std::pair<PrEvElement, int>> {
    PrEvElement m = s.prev_elem(n, r, md);
    auto degs = m.element_degrees();
    if (degs.empty()) return std::nullopt;
    int d = degs[s.below(static_cast<int>(degs.size()))];
    return std::make_pair(m.graded_part(d), d);
  };

  b.prop("operator bracket is the commutator on sections",
         "atiyah.operator_commutator", [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d1 = draw_op(s), d2 = draw_op(s);
           std::vector<Poly> v = s.section(n, r, md);
           std::vector<Poly> lhs = atiyah_bracket(d1, d2).apply(v);
           std::vector<Poly> a1 = d1.apply(d2.apply(v));
           std::vector<Poly> a2 = d2.apply(d1.apply(v));
           for (int j = 0; j < r; ++j)
             if (!(lhs[j] - a1[j] + a2[j]).is_zero())
               return "slot " + std::to_string(j) + ": lhs = " + lhs[j].str() +
                      "; commutator = " + (a1[j] - a2[j]).str();
           return std::nullopt;
         });

  b.prop("lowered operator is a graded antiderivation over forms",
         "atiyah.iota_antiderivation", [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d = draw_op(s);
           const int p = s.below(n + 1);
           Form g = s.form(n, p, md);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement lhs = iota_tilde(d, prev_scalar(g, m));
           PrEvElement rhs = prev_scalar(interior(d.symbol, g), m) +
                             neg_if(odd(p), prev_scalar(g, iota_tilde(d, m)));
           if (lhs == rhs) return std::nullopt;
           return "g = " + g.str() + "; m = " + m.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("lowered operator squares to zero", "atiyah.iota_squared",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d = draw_op(s);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement out = iota_tilde(d, iota_tilde(d, m));
           if (out.is_zero()) return std::nullopt;
           return "m = " + m.str() + "; ii m = " + out.str();
         });

  b.prop("lowered operator is function linear", "atiyah.iota_function_linear",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d = draw_op(s);
           Poly f = s.poly(n, md);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement lhs = iota_tilde(f * d, m);
           PrEvElement rhs = prev_scalar(Form::from_poly(f), iota_tilde(d, m));
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; m = " + m.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("raised operator on a plain summand", "atiyah.d_tilde_plain_atom",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d = draw_op(s);
           const int i = s.below(r);
           Form w = s.form(n, s.below(n + 1), md);
           std::vector<PrevRawTerm> raw(1);
           raw[0].coeff = SuperFunc(w, Form(n));
           raw[0].section = unit_section(n, r, i);
           PrEvElement lhs = d_tilde(d, prev_normalize(n, r, raw));
           std::vector<PrevRawTerm> exp(2);
           exp[0].coeff = SuperFunc(lie_derivative(d.symbol, w), Form(n));
           exp[0].section = unit_section(n, r, i);
           exp[1].coeff = SuperFunc(w, Form(n));
           exp[1].section = d.apply(unit_section(n, r, i));
           PrEvElement rhs = prev_normalize(n, r, exp);
           if (lhs == rhs) return std::nullopt;
           return "w = " + w.str() + "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("raised operator on an eps summand", "atiyah.d_tilde_eps_atom",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d = draw_op(s);
           const int i = s.below(r);
           Form w = s.form(n, s.below(n + 1), md);
           std::vector<PrevRawTerm> raw(1);
           raw[0].coeff = SuperFunc(Form(n), w);
           raw[0].section = unit_section(n, r, i);
           PrEvElement lhs = d_tilde(d, prev_normalize(n, r, raw));
           std::vector<PrevRawTerm> exp(2);
           exp[0].coeff = SuperFunc(Form(n), lie_derivative(d.symbol, w));
           exp[0].section = unit_section(n, r, i);
           exp[1].coeff = SuperFunc(Form(n), w);
           exp[1].section = d.apply(unit_section(n, r, i));
           PrEvElement rhs = prev_normalize(n, r, exp);
           if (lhs == rhs) return std::nullopt;
           return "w = " + w.str() + "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("raised operator of a scaled operator", "atiyah.d_tilde_scaled_operator",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d = draw_op(s);
           Poly f = s.poly(n, md);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement lhs = d_tilde(f * d, m);
           PrEvElement rhs =
               prev_scalar(de_rham(Form::from_poly(f)), iota_tilde(d, m)) +
               prev_scalar(Form::from_poly(f), d_tilde(d, m));
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; m = " + m.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("raised operators bracket as a commutator", "atiyah.d_tilde_commutator",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d1 = draw_op(s), d2 = draw_op(s);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement lhs = d_tilde(d1, d_tilde(d2, m)) - d_tilde(d2, d_tilde(d1, m));
           PrEvElement rhs = d_tilde(atiyah_bracket(d1, d2), m);
           if (lhs == rhs) return std::nullopt;
           return "m = " + m.str() + "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("mixed commutator lowers the operator bracket", "atiyah.mixed_commutator",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d1 = draw_op(s), d2 = draw_op(s);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement lhs =
               d_tilde(d1, iota_tilde(d2, m)) - iota_tilde(d2, d_tilde(d1, m));
           PrEvElement rhs = iota_tilde(atiyah_bracket(d1, d2), m);
           if (lhs == rhs) return std::nullopt;
           return "m = " + m.str() + "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("lowered operators anticommute", "atiyah.iota_anticommutator",
         [=, &draw_op](Sampler& s) -> Cx {
           AtiyahOperator d1 = draw_op(s), d2 = draw_op(s);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement out =
               iota_tilde(d1, iota_tilde(d2, m)) + iota_tilde(d2, iota_tilde(d1, m));
           if (out.is_zero()) return std::nullopt;
           return "m = " + m.str() + "; anticommutator = " + out.str();
         });

  b.check("operator frame algebroid is consistent", "atiyah.algebroid_valid",
          [=](Sampler&) -> Cx {
            atiyah_algebroid(n, r).self_check();
            return std::nullopt;
          });

  b.prop("section bracket matches the operator bracket",
         "atiyah.operator_of_bracket", [=](Sampler& s) -> Cx {
           LieAlgebroidStructure aa = atiyah_algebroid(n, r);
           std::vector<Poly> s1 = s.section(n, aa.rank, md);
           std::vector<Poly> s2 = s.section(n, aa.rank, md);
           AtiyahOperator lhs =
               atiyah_section_operator(n, r, aa.bracket_sections(s1, s2));
           AtiyahOperator rhs = atiyah_bracket(atiyah_section_operator(n, r, s1),
                                               atiyah_section_operator(n, r, s2));
           if (lhs == rhs) return std::nullopt;
           return "sections produced different operators";
         });

  b.prop("extended action is a bracket morphism", "atiyah.action_morphism",
         [=](Sampler& s) -> Cx {
           LieAlgebroidStructure aa = atiyah_algebroid(n, r);
           auto draw_hom_op =
               [&](Sampler& ss) -> std::optional<std::pair<PrEvElement, int>> {
             PrEvElement m = ss.prev_elem(n, aa.rank, md);
             auto degs = m.element_degrees();
             if (degs.empty()) return std::nullopt;
             int d = degs[ss.below(static_cast<int>(degs.size()))];
             return std::make_pair(m.graded_part(d), d);
           };
           auto hx = draw_hom_op(s), hy = draw_hom_op(s);
           if (!hx || !hy) return std::nullopt;
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement lhs = atiyah_action(
               n, r, sharp_bracket(aa, hx->first, hy->first), m);
           PrEvElement rhs =
               atiyah_action(n, r, hx->first, atiyah_action(n, r, hy->first, m)) -
               neg_if(odd(hx->second) && odd(hy->second),
                      atiyah_action(n, r, hy->first,
                                    atiyah_action(n, r, hx->first, m)));
           if (lhs == rhs) return std::nullopt;
           return "x = " + hx->first.str() + "; y = " + hy->first.str() +
                  "; m = " + m.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("extended action is a first-order operator over forms",
         "atiyah.action_leibniz", [=](Sampler& s) -> Cx {
           LieAlgebroidStructure aa = atiyah_algebroid(n, r);
           PrEvElement raw_op = s.prev_elem(n, aa.rank, md);
           auto degs = raw_op.element_degrees();
           if (degs.empty()) return std::nullopt;
           int dop = degs[s.below(static_cast<int>(degs.size()))];
           PrEvElement x = raw_op.graded_part(dop);
           const int p = s.below(n + 1);
           Form g = s.form(n, p, md);
           PrEvElement m = s.prev_elem(n, r, md);
           PrEvElement lhs = atiyah_action(n, r, x, prev_scalar(g, m));
           PrEvElement rhs = prev_scalar(sharp_act(aa, x, g), m) +
                             neg_if(odd(dop) && odd(p),
                                    prev_scalar(g, atiyah_action(n, r, x, m)));
           if (lhs == rhs) return std::nullopt;
           return "x = " + x.str() + "; g = " + g.str() + "; m = " + m.str() +
                  "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  return b.take();
}

// ---------------------------------------------------------------------------
// courant-axioms: the defining identities on the configured structure.

const char* axiom_display_name(const std::string& id) {
  if (id == "courant.bracket_jacobi") return "bracket satisfies the Jacobi identity";
  if (id == "courant.anchor_morphism") return "anchor is a bracket morphism";
  if (id == "courant.coanchor_complex") return "anchor annihilates transgressed forms";
  if (id == "courant.bracket_function_leibniz")
    return "bracket is first order in the right slot";
  if (id == "courant.pairing_invariance") return "bracket invariance of the pairing";
  if (id == "courant.pairing_cyclic") return "cyclic pairing identity";
  if (id == "courant.forms_left_ideal")
    return "transgressed forms bracket back into themselves";
  if (id == "courant.pairing_coanchor_adjunction")
    return "pairing against a transgressed form is contraction";
  if (id == "courant.symmetrizer") return "symmetrized bracket is transgressed";
  return "structure identity";
}

SuiteResult run_courant_axioms(const SuiteConfig& cfg) {
  SuiteBuilder b("courant-axioms", cfg);
  const CourantStructure Q = structure_from_config(cfg);
  const int md = cfg.max_poly_degree;

  b.check("structure data is well formed", "courant.validate",
          [&](Sampler&) -> Cx {
            Q.validate();
            if (Q.family == CourantFamily::twisted && !Q.twist_is_closed())
              return "twist is not closed";
            return std::nullopt;
          });

  Sampler s = b.stream();
  auto draw_q = [&]() { return s.courant_elem(Q, md); };
  auto draw_f = [&]() { return s.poly(Q.n, md); };
  auto draw_form = [&](int d) { return s.form(Q.n, d, md); };
  for (const AxiomCheck& c : verify_axioms(Q, cfg.samples, draw_q, draw_f, draw_form)) {
    PropertyResult pr;
    pr.name = axiom_display_name(c.id);
    pr.id = c.id;
    pr.samples = c.samples;
    pr.failures = c.failures;
    if (!c.counterexample.empty()) pr.counterexample = c.counterexample;
    b.add(std::move(pr));
  }

  return b.take();
}

// ---------------------------------------------------------------------------
// courant-negative: a deliberately broken twist must be caught, and caught by
// the right identity. On a 3-dimensional chart every twist candidate of
// degree 3 is closed, so the control lives on a 4-dimensional chart.

SuiteResult run_courant_negative(const SuiteConfig& cfg) {
  SuiteBuilder b("courant-negative", cfg);
  const int n = 4, k = 1;
  const int md = cfg.max_poly_degree;
  Form h = Poly::variable(n, 3) * Form::basis(n, {0, 1, 2});
  const CourantStructure Q = twisted_family(n, k, h, /*allow_open_twist=*/true);

  b.check("the control twist is genuinely open", "negative.twist_not_closed",
          [&](Sampler&) -> Cx {
            if (!Q.twist_is_closed()) return std::nullopt;
            return "control twist " + h.str() + " is closed";
          });

  b.check("deterministic Jacobi defect has the predicted value",
          "negative.deterministic_defect", [&](Sampler&) -> Cx {
            auto unit = [&](int i) {
              return Q.make(Form(n), unit_section(n, Q.rank(), i));
            };
            CourantElement q = unit(0), q1 = unit(1), q2 = unit(2);
            CourantElement defect =
                Q.dorfman(q, Q.dorfman(q1, q2)) -
                Q.dorfman(Q.dorfman(q, q1), q2) - Q.dorfman(q1, Q.dorfman(q, q2));
            Form expected = -de_rham(Form::from_poly(Poly::variable(n, 3)));
            if (defect.form_part == expected &&
                std::all_of(defect.vec.begin(), defect.vec.end(),
                            [](const Poly& p) { return p.is_zero(); }))
              return std::nullopt;
            return "defect = " + defect.str() + "; expected form part " +
                   expected.str();
          });

  Sampler s = b.stream();
  auto draw_q = [&]() { return s.courant_elem(Q, md); };
  auto draw_f = [&]() { return s.poly(n, md); };
  auto draw_form = [&](int d) { return s.form(n, d, md); };
  auto checks = verify_axioms(Q, cfg.samples, draw_q, draw_f, draw_form);

  PropertyResult jac;
  jac.name = "open twist is detected by the Jacobi identity";
  jac.id = "negative.jacobi_detects_open_twist";
  PropertyResult rest;
  rest.name = "all other identities are insensitive to the open twist";
  rest.id = "negative.other_identities_hold";
  for (const AxiomCheck& c : checks) {
    if (c.id == "courant.bracket_jacobi") {
      jac.samples = c.samples;
      jac.failures = c.failures > 0 ? 0 : 1;
      if (c.failures == 0)
        jac.counterexample =
            "every sampled triple satisfied the Jacobi identity despite the "
            "open twist";
    } else {
      rest.samples += c.samples;
      rest.failures += c.failures;
      if (c.failures > 0 && !rest.counterexample)
        rest.counterexample = c.id + ": " + c.counterexample;
    }
  }
  b.add(std::move(jac));
  b.add(std::move(rest));

  return b.take();
}

// ---------------------------------------------------------------------------
// connections: isotropic splittings as a torsor and their curvature.

SuiteResult run_connections(const SuiteConfig& cfg) {
  SuiteBuilder b("connections", cfg);
  CourantStructure Q = [&] {
    if (cfg.family == "standard" || cfg.family == "twisted") {
      CourantStructure q = structure_from_config(cfg);
      if (q.twist_is_closed()) return q;
    }
    return standard_family(std::max(1, cfg.chart_dim), cfg.courant_k);
  }();
  const int n = Q.n, k = Q.k;
  const int md = cfg.max_poly_degree;

  b.prop("splitting correction lands on isotropic images",
         "connections.correction_isotropic", [&, n, k, md](Sampler& s) -> Cx {
           Splitting sp;
           for (int i = 0; i < n; ++i)
             sp.frame_images.push_back(
                 Q.make(s.form(n, k, md), unit_section(n, n, i)));
           Connection c = isotropic_from_splitting(Q, sp);
           for (int i = 0; i < n; ++i)
             for (int j = i; j < n; ++j) {
               Form p = Q.pairing(
                   connection_apply(Q, c, VectorField::coordinate(n, i)),
                   connection_apply(Q, c, VectorField::coordinate(n, j)));
               if (!p.is_zero())
                 return "pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") has pairing " + p.str();
             }
           return std::nullopt;
         });

  b.prop("an isotropic splitting is recovered from its frame values",
         "connections.splitting_roundtrip", [&, n, k, md](Sampler& s) -> Cx {
           Form w = s.form(n, k + 1, md);
           Connection c0{w};
           Splitting sp;
           for (int i = 0; i < n; ++i)
             sp.frame_images.push_back(
                 connection_apply(Q, c0, VectorField::coordinate(n, i)));
           Connection c = isotropic_from_splitting(Q, sp);
           if (c.offset == w) return std::nullopt;
           return "offset " + w.str() + " came back as " + c.offset.str();
         });

  b.prop("difference of splittings recovers the offset gap",
         "connections.difference_recovery", [&, n, k, md](Sampler& s) -> Cx {
           Form w1 = s.form(n, k + 1, md), w2 = s.form(n, k + 1, md);
           Form d = connection_difference(Q, Connection{w1}, Connection{w2});
           if (d == w1 - w2) return std::nullopt;
           return diff_str("difference", d, w1 - w2);
         });

  b.prop("offset forms act as a torsor", "connections.torsor",
         [&, n, k, md](Sampler& s) -> Cx {
           Connection c{s.form(n, k + 1, md)};
           Form w = s.form(n, k + 1, md);
           Connection moved = torsor_act(c, w);
           if (!(moved.offset == c.offset + w))
             return "offset moved to " + moved.offset.str();
           Form d = connection_difference(Q, moved, c);
           if (!(d == w)) return diff_str("recovered shift", d, w);
           return std::nullopt;
         });

  b.check("curvature of the base splitting is the twist",
          "connections.curvature_base", [&](Sampler&) -> Cx {
            Form f = curvature(Q, base_connection(Q));
            if (f == Q.twist) return std::nullopt;
            return diff_str("curvature", f, Q.twist);
          });

  b.prop("curvature shifts by the exact image of the offset",
         "connections.curvature_shift", [&, n, k, md](Sampler& s) -> Cx {
           Connection c{s.form(n, k + 1, md)};
           Form w = s.form(n, k + 1, md);
           Form lhs = curvature(Q, torsor_act(c, w));
           Form rhs = curvature(Q, c) + de_rham(w);
           if (lhs == rhs) return std::nullopt;
           return "offset = " + c.offset.str() + "; shift = " + w.str() + "; " +
                  diff_str("curvature", lhs, rhs);
         });

  b.prop("curvature is closed", "connections.curvature_closed",
         [&, n, k, md](Sampler& s) -> Cx {
           Connection c{s.form(n, k + 1, md)};
           Form f = curvature(Q, c);
           if (de_rham(f).is_zero()) return std::nullopt;
           return "curvature " + f.str() + " has differential " +
                  de_rham(f).str();
         });

  return b.take();
}

// ---------------------------------------------------------------------------
// tau suites: the transgressed graded algebroid.

TauElement draw_mixed_tau(Sampler& s, const TauAlgebroid& T, int md) {
  return T.reduce(s.tau_raw(T, md, 2));
}

SuiteResult run_tau_core(const SuiteConfig& cfg) {
  SuiteBuilder b("tau-core", cfg);
  const CourantStructure Q = structure_from_config(cfg);
  const TauAlgebroid T(Q);
  const int n = T.chart_dim();
  const int md = cfg.max_poly_degree;

  b.prop("reduction is idempotent", "tau.reduce_idempotent",
         [&](Sampler& s) -> Cx {
           TauRaw r = s.tau_raw(T, md, 2);
           TauElement once = T.reduce(r);
           TauElement twice = T.reduce(T.raw_of(once));
           if (once == twice) return std::nullopt;
           return "once = " + once.str() + "; twice = " + twice.str();
         });

  b.prop("eps against a transgressed form is a central scalar",
         "tau.relation_coanchor_eps", [&](Sampler& s) -> Cx {
           Form alpha = s.form(n, Q.k, md);
           Form w = s.form(n, s.below(n + 1), md);
           TauElement lhs = T.of_term(w, true, Q.coanchor(alpha));
           TauElement rhs = T.scalar(wedge(w, alpha), T.marking());
           if (lhs == rhs) return std::nullopt;
           return "alpha = " + alpha.str() + "; w = " + w.str() +
                  "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("a plain transgressed form is the differential scalar",
         "tau.relation_coanchor_plain", [&](Sampler& s) -> Cx {
           Form alpha = s.form(n, Q.k, md);
           Form w = s.form(n, s.below(n + 1), md);
           TauElement lhs = T.of_term(w, false, Q.coanchor(alpha));
           TauElement rhs = T.scalar(wedge(w, de_rham(alpha)), T.marking());
           if (lhs == rhs) return std::nullopt;
           return "alpha = " + alpha.str() + "; w = " + w.str() +
                  "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("eps slot balancing over module functions", "tau.relation_module_eps",
         [&](Sampler& s) -> Cx {
           CourantElement q = s.courant_elem(Q, md);
           Poly f = s.poly(n, md);
           Form w = s.form(n, s.below(n + 1), md);
           TauElement lhs = T.of_term(w, true, f * q);
           TauElement rhs = T.of_term(f * w, true, q);
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; q = " + q.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("plain slot balancing over module functions", "tau.relation_module_plain",
         [&](Sampler& s) -> Cx {
           CourantElement q = s.courant_elem(Q, md);
           Poly f = s.poly(n, md);
           Form w = s.form(n, s.below(n + 1), md);
           TauElement lhs = T.of_term(w, false, f * q);
           TauElement rhs = T.of_term(f * w, false, q) +
                            T.of_term(wedge(w, de_rham(Form::from_poly(f))), true, q);
           if (lhs == rhs) return std::nullopt;
           return "f = " + f.str() + "; q = " + q.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("bracket value is independent of the representative",
         "tau.bracket_representative_independence", [&](Sampler& s) -> Cx {
           TauRaw r = s.tau_raw(T, md, 2);
           TauRaw canon = T.raw_of(T.reduce(r));
           TauRaw z = s.tau_raw(T, md, 1);
           TauElement l1 = T.bracket_raw(r, z), l2 = T.bracket_raw(canon, z);
           if (!(l1 == l2))
             return "left slot: raw gave " + l1.str() + "; canonical gave " +
                    l2.str();
           TauElement r1 = T.bracket_raw(z, r), r2 = T.bracket_raw(z, canon);
           if (!(r1 == r2))
             return "right slot: raw gave " + r1.str() + "; canonical gave " +
                    r2.str();
           return std::nullopt;
         });

  b.prop("bracket respects absorption of transgressed forms",
         "tau.relation_bracket_theta", [&](Sampler& s) -> Cx {
           Form alpha = s.form(n, Q.k, md);
           Form w = s.form(n, s.below(n + 1), md);
           TauRaw r1;
           r1.theta = Form(n);
           r1.terms.push_back({w, true, Q.coanchor(alpha)});
           TauRaw r2;
           r2.theta = wedge(w, alpha);
           TauRaw z = s.tau_raw(T, md, 1);
           if (!(T.bracket_raw(r1, z) == T.bracket_raw(r2, z)))
             return "left slot differs for alpha = " + alpha.str() +
                    ", w = " + w.str();
           if (!(T.bracket_raw(z, r1) == T.bracket_raw(z, r2)))
             return "right slot differs for alpha = " + alpha.str() +
                    ", w = " + w.str();
           return std::nullopt;
         });

  b.prop("bracket respects transgressed differentials",
         "tau.relation_bracket_dtheta", [&](Sampler& s) -> Cx {
           Form alpha = s.form(n, Q.k, md);
           Form w = s.form(n, s.below(n + 1), md);
           TauRaw r1;
           r1.theta = Form(n);
           r1.terms.push_back({w, false, Q.coanchor(alpha)});
           TauRaw r2;
           r2.theta = wedge(w, de_rham(alpha));
           TauRaw z = s.tau_raw(T, md, 1);
           if (!(T.bracket_raw(r1, z) == T.bracket_raw(r2, z)))
             return "left slot differs for alpha = " + alpha.str() +
                    ", w = " + w.str();
           if (!(T.bracket_raw(z, r1) == T.bracket_raw(z, r2)))
             return "right slot differs for alpha = " + alpha.str() +
                    ", w = " + w.str();
           return std::nullopt;
         });

  b.prop("bracket respects module balancing", "tau.relation_bracket_module",
         [&](Sampler& s) -> Cx {
           CourantElement q = s.courant_elem(Q, md);
           Poly f = s.poly(n, md);
           Form w = s.form(n, s.below(n + 1), md);
           TauRaw r1;
           r1.theta = Form(n);
           r1.terms.push_back({w, false, f * q});
           TauRaw r2;
           r2.theta = Form(n);
           r2.terms.push_back({f * w, false, q});
           r2.terms.push_back({wedge(w, de_rham(Form::from_poly(f))), true, q});
           TauRaw z = s.tau_raw(T, md, 1);
           if (!(T.bracket_raw(r1, z) == T.bracket_raw(r2, z)))
             return "left slot differs for f = " + f.str() + ", w = " + w.str();
           if (!(T.bracket_raw(z, r1) == T.bracket_raw(z, r2)))
             return "right slot differs for f = " + f.str() + ", w = " + w.str();
           TauRaw e1;
           e1.theta = Form(n);
           e1.terms.push_back({w, true, f * q});
           TauRaw e2;
           e2.theta = Form(n);
           e2.terms.push_back({f * w, true, q});
           if (!(T.bracket_raw(e1, z) == T.bracket_raw(e2, z)))
             return "eps left slot differs for f = " + f.str() + ", w = " + w.str();
           if (!(T.bracket_raw(z, e1) == T.bracket_raw(z, e2)))
             return "eps right slot differs for f = " + f.str() +
                    ", w = " + w.str();
           return std::nullopt;
         });

  b.prop("bracket is a first-order operator over forms", "tau.leibniz_scalar",
         [&](Sampler& s) -> Cx {
           const int ed = s.int_in(-T.shift(), n);
           TauElement x = s.tau_elem(T, ed, md);
           const int p = s.below(n + 1);
           Form w = s.form(n, p, md);
           TauElement y = draw_mixed_tau(s, T, md);
           TauElement lhs = T.bracket(x, T.scalar(w, y));
           Form act = sharp_act(tangent_algebroid(n), T.anchor(x), w);
           TauElement rhs = T.scalar(act, y) +
                            neg_if(odd(ed) && odd(p), T.scalar(w, T.bracket(x, y)));
           if (lhs == rhs) return std::nullopt;
           return "x = " + x.str() + "; w = " + w.str() + "; y = " + y.str() +
                  "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("differential squares to zero", "tau.diff_squared",
         [&](Sampler& s) -> Cx {
           TauElement a = draw_mixed_tau(s, T, md);
           TauElement r = T.diff(T.diff(a));
           if (r.is_zero()) return std::nullopt;
           return "a = " + a.str() + "; dd a = " + r.str();
         });

  b.prop("differential respects the defining relations",
         "tau.diff_respects_relations", [&](Sampler& s) -> Cx {
           CourantElement q = s.courant_elem(Q, md);
           const int p = s.below(n + 1);
           Form w = s.form(n, p, md);
           TauElement lhs_eps = T.diff(T.of_term(w, true, q));
           TauElement rhs_eps = T.of_term(de_rham(w), true, q) +
                                neg_if(odd(p), T.of_term(w, false, q));
           if (!(lhs_eps == rhs_eps))
             return "eps slot: w = " + w.str() + "; lhs = " + lhs_eps.str() +
                    "; rhs = " + rhs_eps.str();
           TauElement lhs_pl = T.diff(T.of_term(w, false, q));
           TauElement rhs_pl = T.of_term(de_rham(w), false, q);
           if (!(lhs_pl == rhs_pl))
             return "plain slot: w = " + w.str() + "; lhs = " + lhs_pl.str() +
                    "; rhs = " + rhs_pl.str();
           return std::nullopt;
         });

  b.prop("differential is a graded bracket derivation", "tau.diff_bracket",
         [&](Sampler& s) -> Cx {
           const int ed = s.int_in(-T.shift(), n);
           TauElement x = s.tau_elem(T, ed, md);
           TauElement y = draw_mixed_tau(s, T, md);
           TauElement lhs = T.diff(T.bracket(x, y));
           TauElement rhs = T.bracket(T.diff(x), y) +
                            neg_if(odd(ed), T.bracket(x, T.diff(y)));
           if (lhs == rhs) return std::nullopt;
           return "x = " + x.str() + "; y = " + y.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("anchor is a bracket morphism", "tau.anchor_morphism",
         [&](Sampler& s) -> Cx {
           LieAlgebroidStructure tg = tangent_algebroid(n);
           TauElement x = draw_mixed_tau(s, T, md);
           TauElement y = draw_mixed_tau(s, T, md);
           PrEvElement lhs = T.anchor(T.bracket(x, y));
           PrEvElement rhs = sharp_bracket(tg, T.anchor(x), T.anchor(y));
           if (lhs == rhs) return std::nullopt;
           return "x = " + x.str() + "; y = " + y.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  return b.take();
}

SuiteResult run_tau_skew(const SuiteConfig& cfg) {
  SuiteBuilder b("tau-skew", cfg);
  const CourantStructure Q = structure_from_config(cfg);
  const TauAlgebroid T(Q);
  const int n = T.chart_dim();
  const int md = cfg.max_poly_degree;

  b.prop("bracket is graded antisymmetric on homogeneous elements",
         "tau.skew_homogeneous", [&](Sampler& s) -> Cx {
           const int dx = s.int_in(-T.shift(), n);
           const int dy = s.int_in(-T.shift(), n);
           TauElement x = s.tau_elem(T, dx, md);
           TauElement y = s.tau_elem(T, dy, md);
           TauElement r = T.bracket(x, y) +
                          neg_if(odd(dx) && odd(dy), T.bracket(y, x));
           if (r.is_zero()) return std::nullopt;
           return "x = " + x.str() + "; y = " + y.str() +
                  "; symmetric part = " + r.str();
         });

  b.prop("bracket is graded antisymmetric on module summands",
         "tau.skew_atom_shapes", [&](Sampler& s) -> Cx {
           for (int shape = 0; shape < 4; ++shape) {
             const bool e1 = shape & 1, e2 = (shape >> 1) & 1;
             const int p1 = s.below(n + 1), p2 = s.below(n + 1);
             Form w1 = s.form(n, p1, md), w2 = s.form(n, p2, md);
             CourantElement qa = s.courant_elem(Q, md), qb = s.courant_elem(Q, md);
             TauElement x = T.of_term(w1, e1, qa), y = T.of_term(w2, e2, qb);
             const int dx = p1 - (e1 ? 1 : 0), dy = p2 - (e2 ? 1 : 0);
             TauElement r = T.bracket(x, y) +
                            neg_if(odd(dx) && odd(dy), T.bracket(y, x));
             if (!r.is_zero())
               return "shape (" + std::string(e1 ? "eps" : "plain") + "," +
                      (e2 ? "eps" : "plain") + "): x = " + x.str() +
                      "; y = " + y.str() + "; symmetric part = " + r.str();
           }
           return std::nullopt;
         });

  b.prop("bracket is graded antisymmetric against the central line",
         "tau.skew_with_marking", [&](Sampler& s) -> Cx {
           Form th = s.form(n, s.below(n + 1), md);
           const int dth = (th.is_zero() ? 0 : th.degree()) - T.shift();
           TauElement x = T.scalar(th, T.marking());
           const int dy = s.int_in(-T.shift(), n);
           TauElement y = s.tau_elem(T, dy, md);
           TauElement r = T.bracket(x, y) +
                          neg_if(odd(dth) && odd(dy), T.bracket(y, x));
           if (r.is_zero()) return std::nullopt;
           return "theta = " + th.str() + "; y = " + y.str() +
                  "; symmetric part = " + r.str();
         });

  return b.take();
}

SuiteResult run_tau_jacobi(const SuiteConfig& cfg) {
  SuiteBuilder b("tau-jacobi", cfg);
  const CourantStructure Q = structure_from_config(cfg);
  const TauAlgebroid T(Q);
  const int n = T.chart_dim();
  const int md = cfg.max_poly_degree;

  auto jacobi_defect = [&](const TauElement& x, int dx, const TauElement& y,
                           int dy, const TauElement& z) {
    return T.bracket(x, T.bracket(y, z)) - T.bracket(T.bracket(x, y), z) -
           neg_if(odd(dx) && odd(dy), T.bracket(y, T.bracket(x, z)));
  };

  b.prop("graded Jacobi identity on homogeneous elements",
         "tau.jacobi_homogeneous", [&](Sampler& s) -> Cx {
           const int dx = s.int_in(-T.shift(), n);
           const int dy = s.int_in(-T.shift(), n);
           const int dz = s.int_in(-T.shift(), n);
           TauElement x = s.tau_elem(T, dx, md);
           TauElement y = s.tau_elem(T, dy, md);
           TauElement z = s.tau_elem(T, dz, md);
           TauElement r = jacobi_defect(x, dx, y, dy, z);
           if (r.is_zero()) return std::nullopt;
           return "x = " + x.str() + "; y = " + y.str() + "; z = " + z.str() +
                  "; defect = " + r.str();
         });

  b.prop("graded Jacobi identity across module summand shapes",
         "tau.jacobi_atom_shapes", [&](Sampler& s) -> Cx {
           for (int shape = 0; shape < 8; ++shape) {
             const bool e1 = shape & 1, e2 = (shape >> 1) & 1, e3 = (shape >> 2) & 1;
             const int p1 = s.below(n + 1), p2 = s.below(n + 1), p3 = s.below(n + 1);
             TauElement x = T.of_term(s.form(n, p1, md), e1, s.courant_elem(Q, md));
             TauElement y = T.of_term(s.form(n, p2, md), e2, s.courant_elem(Q, md));
             TauElement z = T.of_term(s.form(n, p3, md), e3, s.courant_elem(Q, md));
             TauElement r = jacobi_defect(x, p1 - (e1 ? 1 : 0), y,
                                          p2 - (e2 ? 1 : 0), z);
             if (!r.is_zero())
               return "shape " + std::to_string(shape) + ": x = " + x.str() +
                      "; y = " + y.str() + "; z = " + z.str() +
                      "; defect = " + r.str();
           }
           return std::nullopt;
         });

  b.prop("graded Jacobi identity with a central factor", "tau.jacobi_with_marking",
         [&](Sampler& s) -> Cx {
           Form th = s.form(n, s.below(n + 1), md);
           const int dth = (th.is_zero() ? 0 : th.degree()) - T.shift();
           TauElement x = T.scalar(th, T.marking());
           const int dy = s.int_in(-T.shift(), n);
           TauElement y = s.tau_elem(T, dy, md);
           TauElement z = draw_mixed_tau(s, T, md);
           TauElement r1 = jacobi_defect(x, dth, y, dy, z);
           if (!r1.is_zero())
             return "central in slot one: defect = " + r1.str();
           TauElement r2 = jacobi_defect(y, dy, x, dth, z);
           if (!r2.is_zero())
             return "central in slot two: defect = " + r2.str();
           return std::nullopt;
         });

  return b.take();
}

SuiteResult run_tau_marking(const SuiteConfig& cfg) {
  SuiteBuilder b("tau-marking", cfg);
  const CourantStructure Q = structure_from_config(cfg);
  const TauAlgebroid T(Q);
  const int n = T.chart_dim();
  const int md = cfg.max_poly_degree;

  b.check("marking sits in the expected degree", "marking.degree",
          [&](Sampler&) -> Cx {
            auto ds = T.marking().element_degrees(T.shift());
            if (ds.size() == 1 && ds[0] == -T.shift()) return std::nullopt;
            return "marking degrees are not concentrated at -" +
                   std::to_string(T.shift());
          });

  b.check("marking is closed", "marking.closed", [&](Sampler&) -> Cx {
    TauElement d = T.diff(T.marking());
    if (d.is_zero()) return std::nullopt;
    return "differential of the marking is " + d.str();
  });

  b.prop("marking passes the central marking checks", "marking.checks_pass",
         [&](Sampler& s) -> Cx {
           std::vector<TauElement> probes;
           probes.push_back(draw_mixed_tau(s, T, md));
           probes.push_back(initial_ctl(T, s.courant_elem(Q, md)));
           std::vector<Form> scalars = {s.mixed_form(n, 0, n, md)};
           MarkedCheck mc = check_marked(T, T.marking(), probes, scalars);
           if (mc.pass()) return std::nullopt;
           return mc.detail;
         });

  b.prop("the central line is a two-sided bracket ideal", "marking.central_ideal",
         [&](Sampler& s) -> Cx {
           Form th = s.form(n, s.below(n + 1), md);
           TauElement x = T.scalar(th, T.marking());
           TauElement y = draw_mixed_tau(s, T, md);
           if (!T.bracket(x, y).is_theta_only())
             return "left bracket leaves the central line for theta = " + th.str();
           if (!T.bracket(y, x).is_theta_only())
             return "right bracket leaves the central line for theta = " + th.str();
           return std::nullopt;
         });

  b.prop("bracket against the central line acts by the plain symbol",
         "marking.bracket_plain", [&](Sampler& s) -> Cx {
           CourantElement q = s.courant_elem(Q, md);
           Form w = s.form(n, s.below(n + 1), md);
           Form th = s.form(n, s.below(n + 1), md);
           TauElement lhs =
               T.bracket(T.of_term(w, false, q), T.scalar(th, T.marking()));
           Form expected = wedge(w, lie_derivative(Q.anchor(q), th));
           TauElement rhs = T.scalar(expected, T.marking());
           if (lhs == rhs) return std::nullopt;
           return "q = " + q.str() + "; w = " + w.str() + "; theta = " + th.str() +
                  "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("bracket against the central line acts by the eps symbol",
         "marking.bracket_eps", [&](Sampler& s) -> Cx {
           CourantElement q = s.courant_elem(Q, md);
           Form w = s.form(n, s.below(n + 1), md);
           Form th = s.form(n, s.below(n + 1), md);
           TauElement lhs =
               T.bracket(T.of_term(w, true, q), T.scalar(th, T.marking()));
           Form expected = wedge(w, interior(Q.anchor(q), th));
           TauElement rhs = T.scalar(expected, T.marking());
           if (lhs == rhs) return std::nullopt;
           return "q = " + q.str() + "; w = " + w.str() + "; theta = " + th.str() +
                  "; lhs = " + lhs.str() + "; rhs = " + rhs.str();
         });

  b.prop("differential of a central scalar is the scalar of the differential",
         "marking.diff_scalar", [&](Sampler& s) -> Cx {
           Form th = s.mixed_form(n, 0, n, md);
           TauElement lhs = T.diff(T.scalar(th, T.marking()));
           TauElement rhs = T.scalar(de_rham(th), T.marking());
           if (lhs == rhs) return std::nullopt;
           return "theta = " + th.str() + "; lhs = " + lhs.str() +
                  "; rhs = " + rhs.str();
         });

  b.prop("low degrees embed the form spaces along the central line",
         "marking.central_embedding", [&](Sampler& s) -> Cx {
           const int i = s.int_in(-T.shift(), -2);
           Form th = s.form(n, i + T.shift(), md);
           TauElement a = T.scalar(th, T.marking());
           if (th.is_zero()) {
             if (a.is_zero()) return std::nullopt;
             return "zero form mapped to " + a.str();
           }
           if (a.is_zero())
             return "nonzero form " + th.str() + " mapped to zero in degree " +
                    std::to_string(i);
           if (!a.is_theta_only())
             return "image of " + th.str() + " left the central line";
           auto ds = a.element_degrees(T.shift());
           if (ds.size() != 1 || ds[0] != i)
             return "image of " + th.str() + " is not concentrated in degree " +
                    std::to_string(i);
           TauElement h = s.tau_elem(T, i, md);
           if (!h.is_theta_only())
             return "a homogeneous element of degree " + std::to_string(i) +
                    " is not on the central line: " + h.str();
           return std::nullopt;
         });

  b.check("a module element fails the marking checks", "marking.negative_candidate",
          [&](Sampler& s) -> Cx {
            CourantStructure Qs = standard_family(std::max(1, cfg.chart_dim),
                                                  cfg.courant_k);
            TauAlgebroid Ts(Qs);
            CourantElement cand =
                Qs.make(Form(Qs.n), unit_section(Qs.n, Qs.rank(), 0));
            std::vector<TauElement> probes;
            for (int i = 0; i < Qs.rank(); ++i)
              probes.push_back(initial_ctl(
                  Ts, Qs.make(Form(Qs.n), unit_section(Qs.n, Qs.rank(), i))));
            probes.push_back(draw_mixed_tau(s, Ts, md));
            std::vector<Form> scalars = {Form::constant(Qs.n, 1)};
            MarkedCheck mc =
                check_marked(Ts, initial_ctl(Ts, cand), probes, scalars);
            if (!mc.pass()) return std::nullopt;
            return "module candidate passed the marking checks";
          });

  return b.take();
}

// ---------------------------------------------------------------------------
// ctl: the morphism squares from a structure into its transgression.

SuiteResult run_ctl(const SuiteConfig& cfg) {
  SuiteBuilder b("ctl", cfg);
  const int n = std::max(1, cfg.chart_dim);
  const int k = cfg.courant_k;
  const int md = cfg.max_poly_degree;

  auto squares_for = [md](SuiteBuilder& bb, const std::string& name,
                          const std::string& id, const CourantStructure& Q) {
    bb.prop(name, id, [&Q, md](Sampler& s) -> Cx {
      TauAlgebroid T(Q);
      auto phi = [&T](const CourantElement& q) { return initial_ctl(T, q); };
      CourantElement q1 = s.courant_elem(Q, md), q2 = s.courant_elem(Q, md);
      Form alpha = s.form(Q.n, Q.k, md);
      std::string f = ctl_square_failure(Q, T, phi, q1, q2, alpha);
      if (f.empty()) return std::nullopt;
      return f + " failed for q1 = " + q1.str() + ", q2 = " + q2.str() +
             ", alpha = " + alpha.str();
    });
  };

  const CourantStructure q_std = standard_family(n, k);
  squares_for(b, "morphism squares hold for the standard family",
              "ctl.squares_standard", q_std);

  const CourantStructure q_quad = quadratic_so3();
  squares_for(b, "morphism squares hold for the quadratic family",
              "ctl.squares_quadratic", q_quad);

  const CourantStructure q_comm = commutative_family(n, k);
  squares_for(b, "morphism squares hold for the commutative family",
              "ctl.squares_commutative", q_comm);

  b.prop("morphism squares hold for the twisted family", "ctl.squares_twisted",
         [=](Sampler& s) -> Cx {
           Form b0 = s.form(n, k + 1, md);
           CourantStructure Q = twisted_family(n, k, de_rham(b0));
           TauAlgebroid T(Q);
           auto phi = [&T](const CourantElement& q) { return initial_ctl(T, q); };
           CourantElement q1 = s.courant_elem(Q, md), q2 = s.courant_elem(Q, md);
           Form alpha = s.form(n, k, md);
           std::string f = ctl_square_failure(Q, T, phi, q1, q2, alpha);
           if (f.empty()) return std::nullopt;
           return f + " failed for twist potential " + b0.str();
         });

  b.prop("re-splitting composes to a morphism", "ctl.resplit_pullback",
         [=](Sampler& s) -> Cx {
           Form b0 = s.form(n, k + 1, md);
           CourantStructure Q = twisted_family(n, k, de_rham(b0));
           Form shift = s.form(n, k + 1, md);
           CourantStructure Qt = resplit_target(Q, shift);
           TauAlgebroid T(Qt);
           auto phi = [&](const CourantElement& q) {
             return initial_ctl(T, resplit_apply(Q, shift, q));
           };
           CourantElement q1 = s.courant_elem(Q, md), q2 = s.courant_elem(Q, md);
           Form alpha = s.form(n, k, md);
           std::string f = ctl_square_failure(Q, T, phi, q1, q2, alpha);
           if (f.empty()) return std::nullopt;
           return f + " failed for shift " + shift.str();
         });

  b.check("a rescaled module map is rejected by the anchor square",
          "ctl.negative_scaled_anchor", [=](Sampler&) -> Cx {
            CourantStructure Q = standard_family(n, k);
            TauAlgebroid T(Q);
            auto bad = [&](const CourantElement& q) {
              CourantElement m = q;
              for (Poly& p : m.vec) p = Rational(2) * p;
              return initial_ctl(T, m);
            };
            CourantElement q1 = Q.make(Form(n), unit_section(n, Q.rank(), 0));
            CourantElement q2 =
                Q.make(Form(n), unit_section(n, Q.rank(), Q.rank() > 1 ? 1 : 0));
            IndexSet I;
            for (int i = 0; i < std::min(n, k); ++i) I.push_back(i);
            Form alpha = k <= n ? Form::basis(n, I) : Form(n);
            std::string f = ctl_square_failure(Q, T, bad, q1, q2, alpha);
            if (f == "anchor square") return std::nullopt;
            return "expected the anchor square to fail first, got '" + f + "'";
          });

  return b.take();
}

// ---------------------------------------------------------------------------
// roundtrip: reconstructing the structure from its transgression.

SuiteResult run_roundtrip(const SuiteConfig& cfg) {
  SuiteBuilder b("roundtrip", cfg);
  const CourantStructure Q = structure_from_config(cfg);
  const TauAlgebroid T(Q);
  const int n = T.chart_dim();
  const int md = cfg.max_poly_degree;
  const ReconstructedCourant R = cour_of(T);

  b.prop("reconstruction hypotheses hold", "roundtrip.hypotheses",
         [&](Sampler& s) -> Cx {
           std::vector<TauElement> probes = {draw_mixed_tau(s, T, md),
                                             initial_ctl(T, s.courant_elem(Q, md))};
           std::string f = cour_of_hypothesis_failure(T, T.marking(), probes);
           if (f.empty()) return std::nullopt;
           return f;
         });

  b.prop("module roundtrip is the identity", "roundtrip.module",
         [&](Sampler& s) -> Cx {
           CourantElement q = s.courant_elem(Q, md);
           CourantElement back = R.to_q(R.from_q(q));
           if (back == q) return std::nullopt;
           return "q = " + q.str() + " came back as " + back.str();
         });

  b.prop("anchor is recovered", "roundtrip.anchor", [&](Sampler& s) -> Cx {
    CourantElement q = s.courant_elem(Q, md);
    VectorField lhs = R.anchor(q), rhs = Q.anchor(q);
    if (lhs == rhs) return std::nullopt;
    return "q = " + q.str() + "; recovered " + lhs.str() + "; expected " +
           rhs.str();
  });

  b.prop("transgressed forms are recovered", "roundtrip.coanchor",
         [&](Sampler& s) -> Cx {
           Form alpha = s.form(n, Q.k, md);
           CourantElement lhs = R.coanchor(alpha), rhs = Q.coanchor(alpha);
           if (lhs == rhs) return std::nullopt;
           return "alpha = " + alpha.str() + "; recovered " + lhs.str() +
                  "; expected " + rhs.str();
         });

  b.prop("pairing is recovered", "roundtrip.pairing", [&](Sampler& s) -> Cx {
    CourantElement a = s.courant_elem(Q, md), c = s.courant_elem(Q, md);
    Form lhs = R.pairing(a, c), rhs = Q.pairing(a, c);
    if (lhs == rhs) return std::nullopt;
    return "a = " + a.str() + "; b = " + c.str() + "; " +
           diff_str("pairing", lhs, rhs);
  });

  b.prop("bracket is recovered", "roundtrip.bracket", [&](Sampler& s) -> Cx {
    CourantElement a = s.courant_elem(Q, md), c = s.courant_elem(Q, md);
    CourantElement lhs = R.dorfman(a, c), rhs = Q.dorfman(a, c);
    if (lhs == rhs) return std::nullopt;
    return "a = " + a.str() + "; b = " + c.str() + "; recovered " + lhs.str() +
           "; expected " + rhs.str();
  });

  b.check("corrupted markings are rejected", "roundtrip.negative_marking",
          [&](Sampler& s) -> Cx {
            std::vector<TauElement> probes = {draw_mixed_tau(s, T, md)};
            TauElement bad;
            if (T.rank() > 0) {
              bad = T.marking() +
                    initial_ctl(T, Q.make(Form(n), unit_section(n, T.rank(), 0)));
            } else {
              bad = T.scalar(Form::basis(n, {0}), T.marking());
            }
            std::string f = cour_of_hypothesis_failure(T, bad, probes);
            if (!f.empty()) return std::nullopt;
            return "corrupted marking candidate was accepted";
          });

  return b.take();
}

// ---------------------------------------------------------------------------
// quadratic-model: the finite-dimensional transgression oracle and the
// universal extension onto it.

SuiteResult run_quadratic_model(const SuiteConfig& cfg) {
  SuiteBuilder b("quadratic-model", cfg);
  const CourantStructure Q = [&] {
    if (cfg.family == "quadratic") return structure_from_config(cfg);
    return quadratic_so3();
  }();
  const TauAlgebroid T(Q);
  const QuadraticModel M(Q);

  std::vector<QuadraticModel::Elem> frame;
  std::vector<TauElement> tau_frame;
  for (int i = 0; i < Q.rank(); ++i) {
    frame.push_back(M.frame(i));
    tau_frame.push_back(
        initial_ctl(T, Q.make(Form(0), unit_section(0, Q.rank(), i))));
  }

  auto draw_elem = [&](Sampler& s) {
    TauElement a = T.zero_elem();
    for (int d = -T.shift(); d <= 0; ++d) a += s.tau_elem(T, d, 0);
    return a;
  };
  auto extend = [&](const TauElement& a) {
    return universal_extend(T, M, frame, a);
  };

  b.check("extension carries the marking to the marking",
          "model.extend_marking", [&](Sampler&) -> Cx {
            if (extend(T.marking()) == M.marking()) return std::nullopt;
            return "marking was not preserved";
          });

  b.prop("extension is a chain map", "model.extend_chain",
         [&](Sampler& s) -> Cx {
           TauElement a = draw_elem(s);
           QuadraticModel::Elem lhs = extend(T.diff(a));
           QuadraticModel::Elem rhs = M.diff(extend(a));
           if (lhs == rhs) return std::nullopt;
           return "a = " + a.str();
         });

  b.prop("extension is a bracket morphism", "model.extend_bracket",
         [&](Sampler& s) -> Cx {
           TauElement x = draw_elem(s), y = draw_elem(s);
           QuadraticModel::Elem lhs = extend(T.bracket(x, y));
           QuadraticModel::Elem rhs = M.bracket(extend(x), extend(y));
           if (lhs == rhs) return std::nullopt;
           return "x = " + x.str() + "; y = " + y.str();
         });

  b.prop("extension along the canonical data is the identity",
         "model.extend_identity", [&](Sampler& s) -> Cx {
           TauElement a = draw_elem(s);
           TauElement back = universal_extend(T, T, tau_frame, a);
           if (back == a) return std::nullopt;
           return "a = " + a.str() + " extended to " + back.str();
         });

  return b.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"cartan",      "oddpath",         "sharp",
          "atiyah",      "courant-axioms",  "courant-negative",
          "connections", "tau-core",        "tau-skew",
          "tau-jacobi",  "tau-marking",     "ctl",
          "roundtrip",   "quadratic-model"};
}

bool is_suite_name(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "cartan") return run_cartan(cfg);
  if (name == "oddpath") return run_oddpath(cfg);
  if (name == "sharp") return run_sharp(cfg);
  if (name == "atiyah") return run_atiyah(cfg);
  if (name == "courant-axioms") return run_courant_axioms(cfg);
  if (name == "courant-negative") return run_courant_negative(cfg);
  if (name == "connections") return run_connections(cfg);
  if (name == "tau-core") return run_tau_core(cfg);
  if (name == "tau-skew") return run_tau_skew(cfg);
  if (name == "tau-jacobi") return run_tau_jacobi(cfg);
  if (name == "tau-marking") return run_tau_marking(cfg);
  if (name == "ctl") return run_ctl(cfg);
  if (name == "roundtrip") return run_roundtrip(cfg);
  if (name == "quadratic-model") return run_quadratic_model(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

VerificationReport run_suites(const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.config = cfg;
  const std::vector<std::string> names =
      cfg.suites.empty() ? suite_names() : cfg.suites;
  for (const std::string& nm : names) rep.suites.push_back(run_suite(nm, cfg));
  return rep;
}

}  // namespace courantx
