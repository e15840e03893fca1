#include "cli.hpp"

#include "hydro/catalog/catalog.hpp"
#include "hydro/catalog/mu.hpp"
#include "hydro/errors.hpp"
#include "hydro/frobenius/frobenius.hpp"
#include "hydro/pencil/normalize.hpp"
#include "hydro/pencil/segre.hpp"
#include "hydro/tensor/geometry.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hydro::cli {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

/// A failure caused by the user's input rather than by the operator.
struct UsageError : Error {
    using Error::Error;
};

std::vector<std::string> display_names(const Ring& ring, const std::vector<std::string>& variables) {
    std::vector<std::string> out = variables;
    out.resize(z(ring.n));
    for (int k = 0; k < ring.n; ++k)
        if (out[z(k)].empty())
            out[z(k)] = "u" + std::to_string(k + 1);
    out.insert(out.end(), ring.params.begin(), ring.params.end());
    return out;
}

std::string point_str(const std::vector<Rational>& p) {
    std::string s;
    for (const auto& x : p)
        s += (s.empty() ? "" : ",") + x.str();
    return "(" + s + ")";
}

Json segre_to_json(const SegreReport& r, const std::vector<std::string>& names) {
    Json j;
    j["label"] = r.label;
    j["consistent"] = r.consistent;
    j["observed"] = r.observed;
    if (r.fits) {
        Json ev = Json::array();
        for (const auto& f : *r.fits) {
            Json e;
            e["re"] = f.re.str(names);
            if (!f.im.is_zero())
                e["im"] = f.im.str(names);
            e["blocks"] = f.blocks;
            ev.push_back(std::move(e));
        }
        j["eigenvalues"] = std::move(ev);
    } else {
        Json pts = Json::array();
        for (const auto& s : r.samples) {
            Json pj;
            pj["point"] = point_str(s.point);
            Json vals = Json::array();
            for (const auto& e : s.eigen) {
                Json v;
                v["value"] = e.value.str();
                v["blocks"] = e.blocks;
                vals.push_back(std::move(v));
            }
            pj["eigenvalues"] = std::move(vals);
            pts.push_back(std::move(pj));
        }
        j["samples"] = std::move(pts);
    }
    return j;
}

std::optional<SegreReport> classify_pair(const OperatorSpec& spec) {
    if (spec.d() < 2 || !spec.metrics[0].is_constant())
        return std::nullopt;
    return segre_type(affinor(spec.metrics[0], spec.metrics[1]), spec.ring);
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write " + path);
    f << j.dump(2) << "\n";
}

CheckMode parse_mode(const std::string& s) {
    if (s == "auto")
        return CheckMode::Auto;
    if (s == "symbolic")
        return CheckMode::Symbolic;
    if (s == "sampled")
        return CheckMode::Sampled;
    throw UsageError("unknown mode " + s);
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        out.push_back(Rational::parse(item));
    }
    return out;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string input;
    std::string mode = "auto";
    std::optional<std::uint64_t> seed;
    std::string output = "json";
    std::string out;
    bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    LoadedSpec ls = load_spec_file(a.input);
    CheckOptions opts;
    opts.mode = parse_mode(a.mode);
    opts.seed = a.seed ? *a.seed : default_seed();
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep = verify_operator(ls.spec, opts);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    Json j;
    j["command"] = "verify";
    j["n"] = ls.spec.n();
    j["d"] = ls.spec.d();
    Json rj = report_to_json(rep);
    for (auto& [k, v] : rj.items())
        j[k] = v;
    auto names = display_names(ls.spec.ring, ls.variables);
    try {
        if (auto s = classify_pair(ls.spec))
            j["segre"] = segre_to_json(*s, names);
    } catch (const UnsupportedEigenvalueField& e) {
        j["segre"]["error"] = e.what();
    }
    if (a.timing)
        j["timing_ms"] = ms.count();

    if (a.output == "json") {
        emit(j, a.out, out);
    } else {
        std::ostringstream t;
        t << "verdict: " << (rep.verdict ? "pass" : "fail") << "\n";
        t << "mode: " << mode_name(rep.mode) << "  seed: " << rep.seed << "\n";
        for (const auto& c : rep.conditions) {
            t << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << (c.informational ? " (informational)" : "");
            if (c.witness) {
                t << " at (";
                for (std::size_t k = 0; k < c.witness->index.size(); ++k)
                    t << (k ? "," : "") << c.witness->index[k];
                t << ") residual " << c.witness->residual;
            }
            t << "\n";
        }
        if (j.contains("segre") && j["segre"].contains("label"))
            t << "segre: " << j["segre"]["label"].get<std::string>() << "\n";
        if (a.timing)
            t << "time: " << ms.count() << " ms\n";
        if (a.out.empty()) {
            out << t.str();
        } else {
            std::ofstream f(a.out);
            if (!f)
                throw UsageError("cannot write " + a.out);
            f << t.str();
        }
    }
    return rep.verdict ? kPass : kFail;
}

// ---------------------------------------------------------------- classify

bool same_eigenvalues(const std::vector<EigenvalueFit>& fits, const CatalogEntry& e, const Ring& ring) {
    if (!(e.spec.ring == ring) || fits.size() != e.eigenvalues.size() || e.eigenvalues.empty())
        return false;
    std::vector<bool> used(fits.size(), false);
    for (const auto& x : e.eigenvalues) {
        bool found = false;
        for (std::size_t k = 0; k < fits.size() && !found; ++k)
            if (!used[k] && fits[k].re == x.re && (fits[k].im == x.im || fits[k].im == -x.im))
                used[k] = found = true;
        if (!found)
            return false;
    }
    return true;
}

bool same_operator(const OperatorSpec& a, const OperatorSpec& b) {
    if (!(a.ring == b.ring) || a.d() != b.d())
        return false;
    for (int k = 0; k < a.d(); ++k)
        if (!(static_cast<const Bivector&>(a.metrics[z(k)]) == static_cast<const Bivector&>(b.metrics[z(k)])))
            return false;
    return true;
}

int cmd_classify(const std::string& input, const std::string& path, std::ostream& out) {
    LoadedSpec ls = load_spec_file(input);
    const auto& spec = ls.spec;
    if (spec.d() < 2)
        throw UsageError("classification needs at least two metrics");
    if (!spec.metrics[0].is_constant())
        throw UsageError("classification needs a constant first metric");
    SegreReport s = *classify_pair(spec);
    auto names = display_names(spec.ring, ls.variables);

    Json j;
    j["command"] = "classify";
    j["n"] = spec.n();
    j["d"] = spec.d();
    j["segre"] = segre_to_json(s, names);
    std::size_t distinct = s.eigenvalues.size();
    j["reducible_hint"] = spec.reducible || distinct > 1;

    struct Match {
        const CatalogEntry* e;
        int score;
    };
    std::vector<Match> matches;
    for (const auto& e : catalog()) {
        if (e.n() != spec.n() || e.d() != spec.d())
            continue;
        int score = 0;
        if (same_operator(e.spec, spec))
            score = 3;
        else if (e.segre == s.label && s.fits && same_eigenvalues(*s.fits, e, spec.ring))
            score = 2;
        else if (e.segre == s.label)
            score = 1;
        if (score > 0)
            matches.push_back({&e, score});
    }
    std::stable_sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) { return a.score > b.score; });
    static const char* kind[] = {"", "segre", "segre+eigenvalues", "identical"};
    Json mj = Json::array();
    for (std::size_t k = 0; k < matches.size() && k < 5; ++k) {
        Json m;
        m["id"] = matches[k].e->id;
        m["match"] = kind[matches[k].score];
        mj.push_back(std::move(m));
    }
    j["nearest"] = matches.empty() ? Json() : Json(matches.front().e->id);
    j["matches"] = std::move(mj);
    emit(j, path, out);
    return kPass;
}

// ---------------------------------------------------------------- catalog

struct CatalogArgs {
    std::string id;
    std::optional<int> n, d;
    std::string out;
    std::string out_dir;
};

Json manifest_entry(const CatalogEntry& e) {
    Json m;
    m["id"] = e.id;
    m["family"] = e.family;
    m["n"] = e.n();
    m["d"] = e.d();
    if (!e.segre.empty())
        m["segre"] = e.segre;
    auto names = e.spec.ring.names();
    Json ev = Json::array();
    for (const auto& x : e.eigenvalues)
        ev.push_back(x.im.is_zero() ? x.re.str(names) : x.re.str(names) + " +- i*(" + x.im.str(names) + ")");
    if (!ev.empty())
        m["eigenvalues"] = std::move(ev);
    m["description"] = e.description;
    return m;
}

int cmd_catalog(const CatalogArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<CatalogEntry> entries;
    if (a.id.empty()) {
        for (const auto& e : catalog())
            if (!a.n || e.n() == *a.n)
                entries.push_back(e);
    } else {
        entries = find_entries(a.id, a.n);
    }
    if (a.d)
        std::erase_if(entries, [&](const CatalogEntry& e) { return e.d() != *a.d; });
    if (entries.empty()) {
        err << "no catalog entry matches";
        if (!a.id.empty())
            err << " '" << a.id << "'";
        err << "; available ids:\n";
        for (const auto& e : catalog())
            err << "  " << e.id << "\n";
        return kUsage;
    }

    Json manifest;
    manifest["catalog_version"] = kCatalogVersion;
    Json list = Json::array();
    for (const auto& e : entries)
        list.push_back(manifest_entry(e));
    manifest["entries"] = list;

    if (!a.out_dir.empty()) {
        std::filesystem::create_directories(a.out_dir);
        for (std::size_t k = 0; k < entries.size(); ++k) {
            std::string file = entries[k].id + ".json";
            emit(spec_to_json(entries[k].spec), (std::filesystem::path(a.out_dir) / file).string(), out);
            manifest["entries"][k]["file"] = file;
        }
        emit(manifest, (std::filesystem::path(a.out_dir) / "manifest.json").string(), out);
        emit(manifest, a.out, out);
        return kPass;
    }
    if (a.id.empty()) {
        emit(manifest, a.out, out);
    } else if (entries.size() == 1) {
        emit(spec_to_json(entries.front().spec), a.out, out);
    } else {
        Json j;
        j["catalog_version"] = kCatalogVersion;
        Json specs = Json::array();
        for (const auto& e : entries) {
            Json s;
            s["id"] = e.id;
            s["spec"] = spec_to_json(e.spec);
            specs.push_back(std::move(s));
        }
        j["entries"] = std::move(specs);
        emit(j, a.out, out);
    }
    return kPass;
}

// ---------------------------------------------------------------- normalize

struct NormalizeArgs {
    int n = 0;
    std::string xi;
    std::optional<int> alpha;
    std::string lambda = "0";
    std::string out;
    bool verify = false;
};

std::string normal_form_str(const JordanFamilyCoeffs& c) {
    std::string s;
    for (int m = 0; m <= c.n - 2; ++m) {
        const Rational& x = c.xi[z(m)];
        if (x.is_zero())
            continue;
        std::string mu = "mu(" + std::to_string(c.n) + ";" + std::to_string(m) + ")";
        const bool minus = !s.empty() && x.sign() < 0;
        const Rational a = minus ? -x : x;
        std::string term = a.is_one() ? mu : a.str() + "*" + mu;
        s += s.empty() ? term : (minus ? " - " : " + ") + term;
    }
    if (!c.lambda.is_zero())
        s += (s.empty() ? "" : " + ") + std::string("g0(") + c.lambda.str() + ")";
    return s.empty() ? "0" : s;
}

int cmd_normalize(const NormalizeArgs& a, std::ostream& out) {
    if (a.n < 2)
        throw UsageError("--n must be at least 2");
    JordanFamilyCoeffs c;
    c.n = a.n;
    c.xi = parse_list(a.xi);
    c.lambda = Rational::parse(a.lambda);
    if (c.xi.size() != z(a.n - 1))
        throw UsageError("--xi needs n - 1 = " + std::to_string(a.n - 1) + " coefficients");
    NormalizedFamily nf;
    if (!a.alpha) {
        if (c.xi[0].is_zero())
            throw UsageError("leading coefficient is zero: pass --alpha for the constant eigenvalue form");
        nf = lie_flow_normalize(c);
    } else {
        if (*a.alpha < 0 || *a.alpha > a.n - 2)
            throw UsageError("--alpha must lie in 0.." + std::to_string(a.n - 2));
        nf = lie_flow_normalize_constant_eig(c);
        if (nf.alpha != *a.alpha)
            throw UsageError("first nonzero coefficient is at " + std::to_string(nf.alpha) + ", not --alpha " +
                             std::to_string(*a.alpha));
    }
    auto strs = [](const std::vector<Rational>& v) {
        Json j = Json::array();
        for (const auto& x : v)
            j.push_back(x.str());
        return j;
    };
    Json j;
    j["command"] = "normalize";
    j["n"] = a.n;
    j["alpha"] = nf.alpha;
    j["lambda"] = c.lambda.str();
    j["input"] = strs(c.xi);
    j["coefficients"] = strs(nf.coeffs.xi);
    j["normal_form"] = normal_form_str(nf.coeffs);
    Json tr = Json::array();
    for (const auto& s : nf.transcript) {
        Json t;
        t["k"] = s.k;
        if (s.skipped)
            t["skipped"] = true;
        else
            t["t"] = s.t.str();
        tr.push_back(std::move(t));
    }
    j["transcript"] = std::move(tr);
    j["moduli"] = nf.moduli;
    int code = kPass;
    if (a.verify) {
        Ring ring(a.n);
        OperatorSpec p(ring, {LinearMetric(ring, antidiagonal(a.n)), LinearMetric(nf.coeffs.bivector())});
        VerificationReport rep = verify_operator(p);
        j["verification"] = report_to_json(rep);
        code = rep.verdict ? kPass : kFail;
    }
    emit(j, a.out, out);
    return code;
}

// ---------------------------------------------------------------- frobenius

int cmd_frobenius(int n, const std::string& mode, const std::string& path, std::ostream& out) {
    if (n < 2)
        throw UsageError("--n must be at least 2");
    FrobeniusData f = build_cp_frobenius(n);
    FrobeniusReport rep = check_frobenius_axioms(f);
    Json j;
    j["command"] = "frobenius";
    j["n"] = n;
    Json ax = Json::array();
    for (const auto& a : rep.axioms) {
        Json aj;
        aj["name"] = a.name;
        aj["pass"] = a.passed;
        if (!a.witness.empty())
            aj["witness"] = a.witness;
        ax.push_back(std::move(aj));
    }
    j["axioms"] = std::move(ax);
    auto opt = [](const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(); };
    j["euler_scaling"]["unity"] = opt(rep.unity_scaling);
    j["euler_scaling"]["product"] = opt(rep.product_scaling);
    j["euler_scaling"]["metric"] = opt(rep.metric_scaling);
    j["euler_normalization"] = "1/" + std::to_string(n - 1);

    Bivector form = intersection_form(f);
    Json rows = Json::array();
    auto names = form.ring().names();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < n; ++k)
            row.push_back(form(i, k).str(names));
        rows.push_back(std::move(row));
    }
    j["intersection_form"] = std::move(rows);
    const bool mokhov = form == mu_bivector(n, 0);
    j["intersection_form_is_mokhov"] = mokhov;
    const bool coh = cohomology_ring_correspondence(n);
    j["cohomology_correspondence"] = coh;
    Ring ring(n);
    CheckOptions opts;
    opts.mode = parse_mode(mode);
    opts.seed = default_seed();
    OperatorSpec pencil(ring, {LinearMetric(ring, antidiagonal(n)), LinearMetric(form)});
    VerificationReport vr = verify_operator(pencil, opts);
    j["pencil"] = report_to_json(vr);
    const bool ok = rep.passed() && mokhov && coh && vr.verdict;
    j["verdict"] = ok ? "pass" : "fail";
    emit(j, path, out);
    return ok ? kPass : kFail;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification and classification of Hamiltonian operators of hydrodynamic type", "hydro"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check the Hamiltonian conditions of an operator spec file");
    verify->add_option("input", va.input, "spec file")->required();
    verify->add_option("--mode", va.mode, "auto, symbolic or sampled")->check(CLI::IsMember({"auto", "symbolic", "sampled"}));
    verify->add_option("--seed", va.seed, "seed for sampled mode (default $HYDRO_SEED)");
    verify->add_option("--output", va.output, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", va.out, "write the report here instead of stdout");
    verify->add_flag("--timing", va.timing, "include the elapsed time (breaks byte-identical output)");

    std::string cl_input, cl_out;
    auto* classify = app.add_subcommand("classify", "Segre type of the first two metrics and nearest catalog entry");
    classify->add_option("input", cl_input, "spec file")->required();
    classify->add_option("--out", cl_out, "write the report here instead of stdout");

    CatalogArgs ca;
    auto* cat = app.add_subcommand("catalog", "list catalog entries or emit them as spec files");
    cat->add_option("--id", ca.id, "entry id or family");
    cat->add_option("--n", ca.n, "number of components");
    cat->add_option("--d", ca.d, "number of independent variables");
    cat->add_option("--out", ca.out, "write here instead of stdout");
    cat->add_option("--out-dir", ca.out_dir, "write one spec file per entry plus manifest.json");

    NormalizeArgs na;
    auto* norm = app.add_subcommand("normalize", "normal form of a single Jordan block family by Lie flows");
    norm->add_option("--n", na.n, "number of components")->required();
    norm->add_option("--xi", na.xi, "coefficients of mu(n;0..n-2), comma separated")->required();
    norm->add_option("--alpha", na.alpha, "index of the leading coefficient (constant eigenvalue form)");
    norm->add_option("--lambda", na.lambda, "eigenvalue of the constant part");
    norm->add_flag("--verify", na.verify, "verify the resulting pair");
    norm->add_option("--out", na.out, "write here instead of stdout");

    int fn = 0;
    std::string fmode = "auto", fout;
    auto* frob = app.add_subcommand("frobenius", "Frobenius structure on the cohomology of projective space");
    frob->add_option("--n", fn, "dimension")->required();
    frob->add_option("--mode", fmode, "mode for verifying the pencil")->check(CLI::IsMember({"auto", "symbolic", "sampled"}));
    frob->add_option("--out", fout, "write here instead of stdout");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kUsage;
    }

    try {
        if (*verify)
            return cmd_verify(va, out);
        if (*classify)
            return cmd_classify(cl_input, cl_out, out);
        if (*cat)
            return cmd_catalog(ca, out, err);
        if (*norm)
            return cmd_normalize(na, out);
        if (*frob)
            return cmd_frobenius(fn, fmode, fout, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ScalingNotNormalized& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DisagreementBug& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

} // namespace hydro::cli
