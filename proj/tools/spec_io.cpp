#include "cli.hpp"

#include "hydro/errors.hpp"
#include "hydro/exact/parse.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace hydro::cli {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

void only_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + " must be an object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            ok = ok || key == a;
        if (!ok)
            throw ParseError("unknown field '" + key + "' in " + where);
    }
}

const nlohmann::json& required(const nlohmann::json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError("missing field '" + std::string(key) + "' in " + where);
    return *it;
}

int integer(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw ParseError(what + " must be an integer");
    auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000)
        throw ParseError(what + " out of range");
    return static_cast<int>(v);
}

std::vector<std::string> names(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array())
        throw ParseError(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& s : j) {
        if (!s.is_string())
            throw ParseError(what + " must be an array of strings");
        const auto& name = s.get_ref<const std::string&>();
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            throw ParseError("bad name '" + name + "' in " + what);
        for (char c : name)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ParseError("bad name '" + name + "' in " + what);
        out.push_back(name);
    }
    std::set<std::string> seen(out.begin(), out.end());
    if (seen.size() != out.size())
        throw ParseError("duplicate name in " + what);
    return out;
}

/// Coefficient strings are polynomials in the parameters only.
MultiPoly coefficient(const nlohmann::json& j, const Ring& ring, const std::string& where) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long long>());
    else
        throw ParseError(where + ": coefficients are strings \"p/q\" or integers");
    MultiPoly p = parse_polynomial(text, ring.params);
    return p.embed(ring.nvars(), ring.n);
}

} // namespace

LoadedSpec spec_from_json(const nlohmann::json& j) {
    only_keys(j, {"n", "d", "variables", "parameters", "metrics", "reducible"}, "spec");
    const int n = integer(required(j, "n", "spec"), "n");
    const int d = integer(required(j, "d", "spec"), "d");
    if (n < 1 || n > kMaxVars)
        throw ParseError("n must lie in 1.." + std::to_string(kMaxVars));
    if (d < 1)
        throw ParseError("d must be positive");
    LoadedSpec out;
    if (j.contains("variables")) {
        out.variables = names(j["variables"], "variables");
        if (out.variables.size() != z(n))
            throw ParseError("variables must list n names");
    } else {
        for (int k = 1; k <= n; ++k)
            out.variables.push_back("u" + std::to_string(k));
    }
    std::vector<std::string> params;
    if (j.contains("parameters"))
        params = names(j["parameters"], "parameters");
    Ring ring(n, params);
    const auto& metrics = required(j, "metrics", "spec");
    if (!metrics.is_array() || metrics.size() != z(d))
        throw ParseError("metrics must be an array of d objects");
    bool reducible = false;
    if (j.contains("reducible")) {
        if (!j["reducible"].is_boolean())
            throw ParseError("reducible must be a boolean");
        reducible = j["reducible"].get<bool>();
    }

    std::vector<LinearMetric> ms;
    for (int b = 0; b < d; ++b) {
        const std::string where = "metric " + std::to_string(b + 1);
        const auto& mj = metrics[z(b)];
        only_keys(mj, {"constant", "linear"}, where);
        auto m = zero_poly_matrix(z(n), z(n), ring.nvars());
        const auto& cj = required(mj, "constant", where);
        if (!cj.is_array() || cj.size() != z(n))
            throw ParseError(where + ": constant must be an n x n array");
        for (int i = 0; i < n; ++i) {
            if (!cj[z(i)].is_array() || cj[z(i)].size() != z(n))
                throw ParseError(where + ": constant must be an n x n array");
            for (int k = 0; k < n; ++k)
                m(z(i), z(k)) = coefficient(cj[z(i)][z(k)], ring, where);
        }
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < i; ++k)
                if (!(m(z(i), z(k)) == m(z(k), z(i))))
                    throw ParseError(where + ": constant part is not symmetric at (" + std::to_string(k + 1) +
                                     "," + std::to_string(i + 1) + ")");
        std::map<std::tuple<int, int, int>, MultiPoly> lin;
        if (mj.contains("linear")) {
            const auto& lj = mj["linear"];
            if (!lj.is_array())
                throw ParseError(where + ": linear must be an array");
            for (const auto& e : lj) {
                only_keys(e, {"i", "j", "k", "coeff"}, where + " linear entry");
                int i = integer(required(e, "i", where), "i");
                int jj = integer(required(e, "j", where), "j");
                int k = integer(required(e, "k", where), "k");
                if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n)
                    throw ParseError(where + ": index out of range 1.." + std::to_string(n));
                MultiPoly c = coefficient(required(e, "coeff", where), ring, where);
                if (!lin.emplace(std::tuple{i, jj, k}, c).second)
                    throw ParseError(where + ": duplicate entry (" + std::to_string(i) + "," + std::to_string(jj) +
                                     "," + std::to_string(k) + ")");
            }
        }
        for (const auto& [key, c] : lin) {
            auto [i, jj, k] = key;
            auto mirror = lin.find({jj, i, k});
            if (mirror != lin.end() && !(mirror->second == c))
                throw ParseError(where + ": linear part is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(jj) + "," + std::to_string(k) + ")");
            m(z(i - 1), z(jj - 1)) += c * ring.u(k);
            if (i != jj && mirror == lin.end())
                m(z(jj - 1), z(i - 1)) += c * ring.u(k);
        }
        try {
            ms.emplace_back(Bivector(ring, std::move(m)));
        } catch (const IdenticallySingular& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    out.spec = OperatorSpec(ring, std::move(ms), reducible);
    return out;
}

LoadedSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return spec_from_json(j);
}

Json spec_to_json(const OperatorSpec& spec, const std::vector<std::string>& variables) {
    const Ring& ring = spec.ring;
    const int n = ring.n;
    auto text = [&](const MultiPoly& p) {
        // coefficients only involve the parameters
        MultiPoly q(static_cast<int>(ring.params.size()));
        for (const auto& t : p.terms()) {
            Monomial m;
            for (std::size_t a = 0; a < ring.params.size(); ++a)
                m.e[a] = t.m.e[z(n) + a];
            m.deg = t.m.deg;
            q += MultiPoly::monomial(q.nvars(), m, t.c);
        }
        return ring.params.empty() ? q.constant_term().str() : q.str(ring.params);
    };
    Json j;
    j["n"] = n;
    j["d"] = spec.d();
    if (!variables.empty()) {
        bool standard = true;
        for (int k = 0; k < n; ++k)
            standard = standard && variables[z(k)] == "u" + std::to_string(k + 1);
        if (!standard)
            j["variables"] = variables;
    }
    if (!ring.params.empty())
        j["parameters"] = ring.params;
    if (spec.reducible)
        j["reducible"] = true;
    Json metrics = Json::array();
    for (const auto& g : spec.metrics) {
        Json mj;
        Bivector c = g.constant_part();
        Json rows = Json::array();
        for (int i = 0; i < n; ++i) {
            Json row = Json::array();
            for (int k = 0; k < n; ++k)
                row.push_back(text(c(i, k)));
            rows.push_back(std::move(row));
        }
        mj["constant"] = std::move(rows);
        Json lin = Json::array();
        for (int i = 0; i < n; ++i)
            for (int jj = i; jj < n; ++jj)
                for (int k = 0; k < n; ++k) {
                    MultiPoly cf = g.coeff(i, jj, k);
                    if (cf.is_zero())
                        continue;
                    Json e;
                    e["i"] = i + 1;
                    e["j"] = jj + 1;
                    e["k"] = k + 1;
                    e["coeff"] = text(cf);
                    lin.push_back(std::move(e));
                }
        mj["linear"] = std::move(lin);
        metrics.push_back(std::move(mj));
    }
    j["metrics"] = std::move(metrics);
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["verdict"] = r.verdict ? "pass" : "fail";
    j["mode"] = mode_name(r.mode);
    j["seed"] = r.seed;
    Json conds = Json::array();
    for (const auto& c : r.conditions) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (c.informational)
            cj["informational"] = true;
        if (c.witness) {
            cj["witness"]["index"] = c.witness->index;
            cj["witness"]["residual"] = c.witness->residual;
        }
        conds.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conds);
    return j;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("HYDRO_SEED");
    if (!env || !*env)
        return kDefaultSeed;
    std::string s(env);
    for (char c : s)
        if (c < '0' || c > '9')
            throw ParseError("HYDRO_SEED must be a non-negative integer");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ParseError("HYDRO_SEED out of range");
    }
}

} // namespace hydro::cli
