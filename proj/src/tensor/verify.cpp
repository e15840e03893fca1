#include "hydro/tensor/verify.hpp"

#include "hydro/errors.hpp"
#include "hydro/tensor/geometry.hpp"
#include "kernels.hpp"

#include <algorithm>

namespace hydro {

void VerificationReport::add(ConditionResult c) {
    if (!c.informational && !c.pass)
        verdict = false;
    conditions.push_back(std::move(c));
}

const ConditionResult* VerificationReport::find(std::string_view name) const {
    for (const auto& c : conditions)
        if (c.name == name)
            return &c;
    return nullptr;
}

bool VerificationReport::passed(std::string_view name) const {
    const auto* c = find(name);
    if (!c)
        throw OutOfRange("no condition named '" + std::string(name) + "' in report");
    return c->pass;
}

std::vector<std::string> VerificationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : conditions)
        if (!c.pass && !c.informational)
            out.push_back(c.name);
    return out;
}

namespace {

using detail::ConditionLog;

ConditionResult from_log(const ConditionLog& log, const std::string& key, const std::string& name,
                         bool informational = false) {
    const auto& e = log.get(key);
    ConditionResult r{name, e.pass, informational, std::nullopt};
    if (!e.pass)
        r.witness = Witness{e.index, e.residual};
    return r;
}

void check_rings(const Bivector& g, const Bivector& h) {
    if (!(g.ring() == h.ring()))
        throw DimensionMismatch("metrics on different rings");
}

std::string pair_name(const char* what, int b, int c) {
    return std::string(what) + "[" + std::to_string(b + 1) + "," + std::to_string(c + 1) + "]";
}

} // namespace

VerificationReport mokhov_conditions(const Bivector& g, const Bivector& h, const CheckOptions& opts) {
    check_rings(g, h);
    VerificationReport rep;
    rep.mode = opts.resolve(g.n());
    rep.seed = opts.seed;
    ConditionLog log;
    detail::with_engines(g.ring(), {g.matrix(), h.matrix()}, rep.mode == CheckMode::Sampled, opts.seed,
                         opts.samples, [&](const auto& e) {
                             using S = typename std::decay_t<decltype(e)>::Scalar;
                             auto lift = [&](const MultiPoly& p) { return e.lift(p); };
                             Matrix<S> G = g.matrix().map(lift);
                             Matrix<S> H = h.matrix().map(lift);
                             auto b = detail::christoffel_b(e, g.matrix(), e.inverse(0));
                             auto bh = detail::christoffel_b(e, h.matrix(), e.inverse(1));
                             log.record("flat(g)", detail::flatness_residual(G, b, e.zero()), e);
                             log.record("flat(h)", detail::flatness_residual(H, bh, e.zero()), e);
                             auto T = detail::raised_obstruction(G, b, H, bh, e.zero());
                             log.record("T1", detail::t1_residual(T, e.zero()), e);
                             log.record("T2", detail::t2_residual(T, e.zero()), e);
                             log.record("T3", detail::t3_residual(T, e.inverse(0), e.zero()), e);
                             log.record("T4", detail::covariant_derivative3(T, G, b, e.zero()), e);
                             log.record("T5", detail::covariant_derivative3(T, H, bh, e.zero()), e);
                         });
    rep.add(from_log(log, "flat(g)", "flat(g)"));
    rep.add(from_log(log, "flat(h)", "flat(h)", true));
    for (const char* t : {"T1", "T2", "T3", "T4", "T5"})
        rep.add(from_log(log, t, t));
    return rep;
}

VerificationReport killing_nijenhuis_conditions(const Bivector& g, const Bivector& h, const CheckOptions& opts) {
    check_rings(g, h);
    if (!g.is_constant())
        throw FirstMetricNotConstant("first metric must be constant in the coordinates");
    VerificationReport rep;
    rep.mode = opts.resolve(g.n());
    rep.seed = opts.seed;
    auto names = g.ring().names();
    ConditionLog log;
    log.record_poly("linearity", linearity_residual(g, h), names);
    log.record_poly("nijenhuis", nijenhuis_torsion(affinor(g, h)), names);
    log.record_poly("killing", killing_residual(g, h), names);
    rep.add(from_log(log, "linearity", "linearity"));
    rep.add(from_log(log, "nijenhuis", "nijenhuis"));
    rep.add(from_log(log, "killing", "killing"));
    try {
        detail::with_engines(h.ring(), {h.matrix()}, rep.mode == CheckMode::Sampled, opts.seed, opts.samples,
                             [&](const auto& e) {
                                 using S = typename std::decay_t<decltype(e)>::Scalar;
                                 Matrix<S> H = h.matrix().map([&](const MultiPoly& p) { return e.lift(p); });
                                 auto bh = detail::christoffel_b(e, h.matrix(), e.inverse(0));
                                 log.record("flat(h)", detail::flatness_residual(H, bh, e.zero()), e);
                             });
        rep.add(from_log(log, "flat(h)", "flat(h)", true));
    } catch (const IdenticallySingular&) {
        rep.add({"flat(h)", false, true, Witness{{}, "metric is degenerate"}});
    }
    return rep;
}

namespace {

VerificationReport verify_multidimensional(const OperatorSpec& spec, const CheckOptions& opts) {
    const int d = spec.d();
    const auto& m = spec.metrics;
    if (!m[0].is_constant())
        throw FirstMetricNotConstant("the first metric must be given in flat (constant) form");
    VerificationReport rep;
    rep.mode = opts.resolve(spec.n());
    rep.seed = opts.seed;
    rep.add({"flat(g1)", is_flat(m[0], opts), false, std::nullopt});
    auto names = spec.ring.names();
    ConditionLog log;
    for (int c = 0; c < d; ++c) {
        const auto& gc = m[static_cast<std::size_t>(c)];
        if (gc.is_constant()) {
            for (int b = 0; b < d; ++b) {
                if (b == c)
                    continue;
                const auto& gb = m[static_cast<std::size_t>(b)];
                log.record_poly(pair_name("linearity", b, c), linearity_residual(gc, gb), names);
                log.record_poly(pair_name("nijenhuis", b, c), nijenhuis_torsion(affinor(gc, gb)), names);
            }
            continue;
        }
        detail::with_engines(spec.ring, {gc.matrix()}, rep.mode == CheckMode::Sampled, opts.seed, opts.samples,
                             [&](const auto& e) {
                                 using S = typename std::decay_t<decltype(e)>::Scalar;
                                 auto lift = [&](const MultiPoly& p) { return e.lift(p); };
                                 Matrix<S> G = gc.matrix().map(lift);
                                 auto bc = detail::christoffel_b(e, gc.matrix(), e.inverse(0));
                                 for (int b = 0; b < d; ++b) {
                                     if (b == c)
                                         continue;
                                     const auto& gb = m[static_cast<std::size_t>(b)];
                                     log.record(pair_name("linearity", b, c),
                                                detail::second_covariant_derivative(e, G, bc, gb.matrix()), e);
                                     Matrix<S> L = gb.matrix().map(lift) * e.inverse(0);
                                     log.record(pair_name("nijenhuis", b, c),
                                                detail::nijenhuis(L, spec.n(), e.zero()), e);
                                 }
                             });
    }
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
            if (b != c)
                log.record_poly(pair_name("killing", b, c),
                                killing_residual(m[static_cast<std::size_t>(b)], m[static_cast<std::size_t>(c)]),
                                names);
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            if (b == c)
                continue;
            for (const char* what : {"linearity", "nijenhuis", "killing"}) {
                auto key = pair_name(what, b, c);
                rep.add(from_log(log, key, key));
            }
        }
    return rep;
}

} // namespace

VerificationReport verify_operator(const OperatorSpec& spec, const CheckOptions& opts) {
    if (spec.d() == 1) {
        VerificationReport rep;
        rep.mode = opts.resolve(spec.n());
        rep.seed = opts.seed;
        rep.add({"flat(g1)", is_flat(spec.metrics[0], opts), false, std::nullopt});
        return rep;
    }
    if (spec.d() >= 3)
        return verify_multidimensional(spec, opts);
    const auto& g = spec.metrics[0];
    const auto& h = spec.metrics[1];
    if (!g.is_constant())
        throw FirstMetricNotConstant("the first metric must be given in flat (constant) form");
    VerificationReport a = mokhov_conditions(g, h, opts);
    VerificationReport b = killing_nijenhuis_conditions(g, h, opts);
    if (a.verdict != b.verdict)
        throw DisagreementBug("obstruction-tensor criterion says " + std::string(a.verdict ? "pass" : "fail") +
                              " but Killing/Nijenhuis criterion says " + (b.verdict ? "pass" : "fail"));
    for (auto& c : b.conditions)
        if (c.name != "flat(h)")
            a.add(std::move(c));
    return a;
}

} // namespace hydro
