// Acceptance gate: one line per criterion, exit status 1 when any fails.

#include "corpus.hpp"
#include "properties.hpp"

#include "hydro/catalog/catalog.hpp"
#include "hydro/catalog/mu.hpp"
#include "hydro/exact/linalg.hpp"
#include "hydro/frobenius/frobenius.hpp"
#include "hydro/pencil/families.hpp"
#include "hydro/pencil/killing.hpp"
#include "hydro/pencil/normalize.hpp"
#include "hydro/pencil/segre.hpp"
#include "hydro/tensor/geometry.hpp"
#include "hydro/tensor/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace hydro;
using hydro::testing::CorpusPair;

namespace {

constexpr double kCatalogBudgetSeconds = 120.0;
constexpr int kRandomPairsPerSize = 50;
constexpr std::uint64_t kCorpusSeed = 424242;
constexpr int kNormalizationSamples = 20;
constexpr std::uint64_t kNormalizationSeed = 8675309;

struct Outcome {
    bool ok = true;
    std::string detail;
};

/// Records the first failure; later ones are counted.
class Check {
  public:
    void expect(bool cond, const std::string& what) {
        if (cond)
            return;
        if (failures_++ == 0)
            first_ = what;
    }
    Outcome done(const std::string& summary) const {
        if (failures_ == 0)
            return {true, summary};
        return {false, std::to_string(failures_) + " failure(s), first: " + first_};
    }

  private:
    int failures_ = 0;
    std::string first_;
};

CheckOptions symbolic() {
    CheckOptions o;
    o.mode = CheckMode::Symbolic;
    return o;
}

std::vector<Rational> coords(const Bivector& b) { return linear_coordinates(b); }

std::size_t width(int n) { return static_cast<std::size_t>((n + 1) * n * (n + 1) / 2); }

/// The two-metric pairs (metrics[0], metrics[b]) of every catalog entry.
std::vector<CorpusPair> catalog_pairs() {
    std::vector<CorpusPair> out;
    for (const auto& e : catalog())
        for (int b = 1; b < e.d(); ++b)
            out.push_back({e.id + "[1," + std::to_string(b + 1) + "]", e.spec.metrics[0],
                           e.spec.metrics[static_cast<std::size_t>(b)]});
    return out;
}

Outcome catalog_verification() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : catalog()) {
        VerificationReport rep = verify_operator(e.spec, symbolic());
        c.expect(rep.verdict, e.id + " fails " + (rep.failures().empty() ? "" : rep.failures()[0]));
    }
    for (const auto& p : catalog_pairs()) {
        c.expect(mokhov_conditions(p.g, p.h, symbolic()).verdict, p.name + " fails the obstruction conditions");
        c.expect(killing_nijenhuis_conditions(p.g, p.h, symbolic()).verdict, p.name + " fails the Killing conditions");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < kCatalogBudgetSeconds, "took " + std::to_string(secs) + " s");
    std::ostringstream s;
    s.precision(3);
    s << catalog().size() << " entries exact in " << secs << " s";
    return c.done(s.str());
}

Outcome criterion_equivalence() {
    Check c;
    std::vector<CorpusPair> pairs = catalog_pairs();
    for (int n : {2, 3})
        for (auto& p : hydro::testing::random_pairs(n, kRandomPairsPerSize, kCorpusSeed + static_cast<std::uint64_t>(n)))
            pairs.push_back(std::move(p));
    int pass = 0, fail = 0;
    for (const auto& p : pairs) {
        bool a = mokhov_conditions(p.g, p.h, symbolic()).verdict;
        bool b = killing_nijenhuis_conditions(p.g, p.h, symbolic()).verdict;
        c.expect(a == b, p.name + ": criteria disagree");
        if (a && b) {
            ++pass;
            c.expect(is_flat(p.h, symbolic()), p.name + ": passing h is not flat");
        } else {
            ++fail;
        }
    }
    c.expect(pass > 0 && fail > 0, "corpus is not mixed");
    return c.done(std::to_string(pairs.size()) + " pairs agree (" + std::to_string(pass) + " pass, " +
                  std::to_string(fail) + " fail)");
}

Outcome solution_dimensions() {
    Check c;
    const std::map<std::string, int> expected = {{"segre3", 2},       {"segre22-plus", 4}, {"segre22-minus", 4},
                                                 {"segre31-plus", 4}, {"segre31-minus", 4}, {"segre4", 3},
                                                 {"complex", 2}};
    for (const auto& nf : pencil_normal_forms()) {
        SolutionFamily f = solve_linear_conditions(nf.g, nf.g0);
        auto it = expected.find(nf.id);
        c.expect(it != expected.end() && f.dimension == it->second,
                 nf.id + ": dimension " + std::to_string(f.dimension));
        c.expect(f.zero_set_dimension == f.dimension,
                 nf.id + ": quadratic zero set has dimension " + std::to_string(f.zero_set_dimension));
        std::vector<std::vector<Rational>> a, b;
        for (const auto& x : f.basis)
            a.push_back(coords(x));
        for (const auto& x : nf.basis)
            b.push_back(coords(x));
        c.expect(same_span(a, b, width(nf.g.n())), nf.id + ": span differs from the displayed basis");
    }
    c.expect(pencil_normal_forms().size() == expected.size(), "normal form list incomplete");
    for (int n = 2; n <= 7; ++n) {
        SolutionFamily f = solve_jordan_family(n);
        c.expect(f.dimension == n - 1 && f.zero_set_dimension == f.dimension,
                 "jordan n = " + std::to_string(n) + ": dimension " + std::to_string(f.dimension));
        std::vector<std::vector<Rational>> a, mu;
        for (const auto& x : f.basis)
            a.push_back(coords(x));
        for (int m = 0; m <= n - 2; ++m)
            mu.push_back(coords(mu_bivector(n, m)));
        c.expect(same_span(a, mu, width(n)), "jordan n = " + std::to_string(n) + ": span differs from mu");
    }
    return c.done("7 normal forms and Jordan n = 2..7 match");
}

Bivector lie_series(const Bivector& b, const VectorField& X, const Rational& t) {
    Bivector total = b, term = b;
    for (int s = 1; s < 64; ++s) {
        term = lie_derivative_bivector(term, X) * (t / Rational(s));
        if (term.is_zero())
            break;
        total += term;
    }
    return total;
}

Outcome normalization() {
    Check c;
    hydro::testing::Rng rng(kNormalizationSeed);
    for (int n : {5, 6, 7}) {
        Ring r(n);
        for (int s = 0; s < kNormalizationSamples; ++s) {
            std::vector<Rational> xi{Rational(1)};
            for (int m = 1; m <= n - 2; ++m)
                xi.push_back(hydro::testing::random_rational(rng));
            JordanFamilyCoeffs in{n, xi, Rational(0)};
            NormalizedFamily out = lie_flow_normalize(in);
            const std::string tag = "n = " + std::to_string(n) + " sample " + std::to_string(s);
            c.expect(out.coeffs.xi[0].is_one(), tag + ": leading coefficient changed");
            for (int m = 1; m <= n - 2; ++m)
                if (n != 7 || m != 2)
                    c.expect(out.coeffs.xi[static_cast<std::size_t>(m)].is_zero(),
                             tag + ": coefficient " + std::to_string(m) + " survives");
            // the same flows applied to the bivector directly
            Bivector direct = in.linear_part();
            for (const auto& step : out.transcript)
                if (!step.skipped)
                    direct = lie_series(direct, jordan_flow_field(r, step.k), step.t);
            c.expect(direct == out.coeffs.linear_part(), tag + ": flow transcript does not reproduce the output");
        }
    }
    for (int n = 3; n <= 7; ++n) {
        Ring r(n);
        Bivector g = Bivector::constant(r, antidiagonal(n));
        for (int k = 1; k <= n - 2; ++k) {
            VectorField X = jordan_flow_field(r, k);
            const std::string tag = "n = " + std::to_string(n) + " k = " + std::to_string(k);
            c.expect(lie_derivative_bivector(g, X).is_zero(), tag + ": not an isometry");
            for (int alpha = 0; alpha <= n - 2; ++alpha) {
                Bivector iter = mu_bivector(r, alpha);
                Rational coeff(1);
                for (int m = 1; alpha + (m - 1) * k <= n - 2; ++m) {
                    iter = lie_derivative_bivector(iter, X);
                    coeff *= Rational(flow_weight(n, k, alpha) - 2 * k * (m - 1));
                    c.expect(iter == mu_bivector(r, alpha + m * k) * coeff,
                             tag + " alpha = " + std::to_string(alpha) + " power " + std::to_string(m));
                }
            }
        }
    }
    return c.done("60 samples normalized, flow identities hold for n <= 7");
}

Outcome frobenius_suite() {
    Check c;
    for (int n = 2; n <= 6; ++n) {
        const std::string tag = "n = " + std::to_string(n);
        FrobeniusData f = build_cp_frobenius(n);
        FrobeniusReport rep = check_frobenius_axioms(f);
        for (const auto& a : rep.axioms)
            c.expect(a.passed, tag + ": " + a.name + " " + a.witness);
        // Lie_E e = -(n-1) e, Lie_E c = (n-1) c, Lie_E g_cov = (1-n) g_cov
        c.expect(rep.unity_scaling && -*rep.unity_scaling == Rational(n - 1), tag + ": unity scaling");
        c.expect(rep.product_scaling && *rep.product_scaling == Rational(n - 1), tag + ": product scaling");
        c.expect(rep.metric_scaling && *rep.metric_scaling == Rational(1 - n), tag + ": metric scaling");
        Bivector form = intersection_form(f);
        c.expect(form == mu_bivector(n, 0), tag + ": intersection form differs from mu");
        Ring r(n);
        OperatorSpec pencil(r, {LinearMetric(Bivector::constant(r, antidiagonal(n))), LinearMetric(form)});
        c.expect(verify_operator(pencil, symbolic()).verdict, tag + ": pencil fails");
    }
    return c.done("n = 2..6 pass, scalings (n-1, n-1, 1-n)");
}

Outcome segre_classification() {
    Check c;
    struct Case {
        std::string id;
        std::string label;
        std::function<bool(const std::vector<EigenvalueFit>&, const Ring&)> eig;
    };
    auto single = [](const std::string& want) {
        return [want](const std::vector<EigenvalueFit>& f, const Ring& r) {
            return f.size() == 1 && f[0].str(r) == want;
        };
    };
    std::vector<Case> cases = {
        {"two-component", "[2]", single("1/1*u2")},
        {"jordan3-mokhov", "[3]",
         [](const std::vector<EigenvalueFit>& f, const Ring& r) {
             return f.size() == 1 && f[0].im.is_zero() && f[0].re.is_monomial() && f[0].re.total_degree() == 1 &&
                    f[0].re.depends_on(2) && r.n == 3;
         }},
        {"segre4-varying", "[4]", nullptr},
        {"mokhov-n4", "[2,2]", nullptr},
        {"complex-normal", "[2c | 2c]", single("1/1*u3 +- i*(1/1*u4)")},
    };
    for (const auto& k : cases) {
        const auto& e = catalog_entry(k.id);
        SegreReport s = segre_type(affinor(e.spec.metrics[0], e.spec.metrics[1]), e.spec.ring);
        c.expect(s.label == k.label, k.id + ": label " + s.label);
        c.expect(s.consistent, k.id + ": inconsistent across samples");
        c.expect(static_cast<int>(s.samples.size()) == kSegrePoints, k.id + ": sample count");
        if (k.eig)
            c.expect(s.fits && k.eig(*s.fits, e.spec.ring), k.id + ": eigenvalues");
    }
    return c.done("5 labels reproduced at " + std::to_string(kSegrePoints) + " points each");
}

Outcome negative_controls() {
    Check c;
    auto controls = hydro::testing::negative_controls();
    std::map<std::string, int> per;
    for (const auto& nc : controls) {
        VerificationReport rep = killing_nijenhuis_conditions(nc.g, nc.h, symbolic());
        const ConditionResult* res = rep.find(nc.condition);
        c.expect(!rep.verdict, nc.name + ": passes");
        c.expect(res && !res->pass && res->witness, nc.name + ": " + nc.condition + " not named");
        if (nc.condition != "linearity")
            c.expect(rep.failures() == std::vector<std::string>{nc.condition}, nc.name + ": other conditions fail too");
        ++per[nc.condition];
    }
    c.expect(controls.size() == 9 && per.size() == 3 && per["killing"] == 3 && per["nijenhuis"] == 3,
             "corpus is not 3 per condition");
    return c.done(std::to_string(controls.size()) + " controls fail on their condition");
}

Outcome property_suites() {
    Check c;
    int cases = 0;
    for (const auto& p : hydro::testing::property_suite()) {
        hydro::testing::PropertyResult r = p.run(hydro::testing::kPropertySeed);
        c.expect(r.ok, p.name + ": " + r.detail);
        c.expect(r.cases > 0, p.name + ": no cases");
        cases += r.cases;
    }
    return c.done(std::to_string(hydro::testing::property_suite().size()) + " suites, " + std::to_string(cases) +
                  " cases");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"catalog verification", catalog_verification},
        {"criterion equivalence", criterion_equivalence},
        {"solution-space dimensions", solution_dimensions},
        {"normalization pipeline", normalization},
        {"Frobenius suite", frobenius_suite},
        {"Segre classification", segre_classification},
        {"negative controls", negative_controls},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        failed += o.ok ? 0 : 1;
        std::cout << "criterion " << i + 1 << " " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
