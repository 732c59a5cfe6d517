#include "hurwitz/request.hpp"

#include <limits>
#include <sstream>

#include "hurwitz/polytope.hpp"
#include "json.hpp"

namespace hurwitz {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---- parsing helpers ----

const ordered_json& need(const ordered_json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) throw RequestError(std::string("request: missing ") + what);
    return *it;
}

int get_int(const ordered_json& v, const char* what) {
    if (!v.is_number_integer())
        throw RequestError(std::string("request: ") + what + " must be an integer");
    long long x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw RequestError(std::string("request: ") + what + " out of range");
    return static_cast<int>(x);
}

std::vector<int> get_int_list(const ordered_json& v, const char* what) {
    if (!v.is_array()) throw RequestError(std::string("request: ") + what + " must be an array");
    std::vector<int> out;
    for (const auto& e : v) out.push_back(get_int(e, what));
    return out;
}

std::string get_string(const ordered_json& v, const char* what) {
    if (!v.is_string()) throw RequestError(std::string("request: ") + what + " must be a string");
    return v.get<std::string>();
}

// ---- rendering helpers ----

template <typename T>
std::string paren_list(const std::vector<T>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

ordered_json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();  // decimal string once past 64 bits
}

ordered_json json_int_list(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

std::vector<std::string> flag_tokens(const ReportFlags& f) {
    std::vector<std::string> out;
    if (f.bound_only) out.push_back("bound_only");
    if (f.delta_below_two) out.push_back("delta<2");
    for (int i : f.non_curve_directions) out.push_back("non_curve(" + std::to_string(i) + ")");
    return out;
}

ordered_json class_json(const ChowClass& c) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, coeff] : c.terms()) {
        ordered_json t;
        t["exponents"] = e;
        t["coefficient"] = json_int(coeff);
        terms.push_back(std::move(t));
    }
    ordered_json out;
    out["polynomial"] = to_string(c);
    out["terms"] = std::move(terms);
    return out;
}

ordered_json volume_json(const VolumeForm& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, coeff] : f.terms) {
        ordered_json t;
        t["exponents"] = e;
        t["coefficient"] = coeff.str();  // exact rational "p/q"
        terms.push_back(std::move(t));
    }
    ordered_json out;
    out["polynomial"] = to_string(f);
    out["terms"] = std::move(terms);
    return out;
}

ordered_json report_json(const DegreeReport& rep) {
    ordered_json r;
    r["alpha"] = rep.alpha;
    r["delta"] = json_int(rep.delta);
    r["genus"] = json_int_list(rep.genus);
    r["degree"] = json_int_list(rep.degree);
    r["flags"] = flag_tokens(rep.flags);
    if (!rep.note.empty()) r["note"] = rep.note;
    return r;
}

void report_table(std::ostringstream& os, const DegreeReport& rep) {
    os << "alpha: " << paren_list(rep.alpha) << "\n";
    os << "delta: " << rep.delta << "\n";
    os << "genus: " << paren_list(rep.genus) << "\n";
    os << "degree: " << paren_list(rep.degree) << "\n";
    os << "flags: " << rep.flags.to_string() << "\n";
    if (!rep.note.empty()) os << "note: " << rep.note << "\n";
}

std::string mode_name(GenusMode m) { return m == GenusMode::Raw ? "raw" : "gated"; }

// ---- uniform view of the four spec kinds ----

struct Dispatch {
    std::string kind;
    Ambient amb = Ambient(std::vector<int>{1});
    int codim = 0;
    GenusMode default_mode = GenusMode::Raw;

    // complete-intersection data (ci and graph kinds)
    std::vector<int> n;
    DegreeMatrix degrees;

    // toric data (toric and game kinds)
    std::optional<ToricCalculator> calc;

    // game / graph data
    std::optional<GameSpec> game;
    std::optional<GraphSpec> graph;
};

Dispatch make_dispatch(const Request& req) {
    Dispatch d;
    if (const CiSpec* ci = std::get_if<CiSpec>(&req.spec)) {
        d.kind = "complete_intersection";
        validate_ci(ci->ambient, ci->degrees);
        d.n = ci->ambient;
        d.degrees = ci->degrees;
        d.amb = Ambient(d.n);
        d.codim = static_cast<int>(d.degrees.size());
        d.default_mode = GenusMode::Raw;
    } else if (const ToricSpec* t = std::get_if<ToricSpec>(&req.spec)) {
        d.kind = "toric";
        d.calc.emplace(*t);  // validates, may raise SpecRejection
        d.amb = d.calc->ambient();
        d.codim = d.calc->codim();
        d.default_mode = GenusMode::Gated;
    } else if (const GameSpec* g = std::get_if<GameSpec>(&req.spec)) {
        d.kind = "game";
        validate_game(*g);
        d.game = *g;
        d.amb = game_ambient(*g);
        d.codim = game_codim(*g);
        d.default_mode = GenusMode::Gated;
    } else {
        const GraphSpec& gr = std::get<GraphSpec>(req.spec);
        d.kind = "graph";
        auto [n, b] = graph_degree_matrix(gr);  // validates
        d.n = std::move(n);
        d.degrees = std::move(b);
        d.amb = Ambient(d.n);
        d.codim = static_cast<int>(d.degrees.size());
        d.default_mode = GenusMode::Raw;
        d.graph = gr;
    }
    return d;
}

ToricCalculator& game_calc(Dispatch& d) {
    if (!d.calc) d.calc.emplace(game_to_toric(*d.game));
    return *d.calc;
}

void check_direction_shape(const Dispatch& d, const Exp& v, const char* what) {
    if (static_cast<int>(v.size()) != d.amb.ell())
        throw RequestError(std::string("request: ") + what + " must have one entry per factor");
}

}  // namespace

Request parse_request_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw RequestError(std::string("request: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw RequestError("request: top level must be an object");
    if (auto it = j.find("schema"); it != j.end()) {
        if (!it->is_number_integer() || it->get<long long>() != 1)
            throw RequestError("request: unsupported schema version");
    }

    const ordered_json& s = need(j, "spec", "spec object");
    if (!s.is_object()) throw RequestError("request: spec must be an object");
    std::string kind = get_string(need(s, "kind", "spec kind"), "spec kind");

    Request r;
    if (kind == "complete_intersection") {
        CiSpec ci;
        ci.ambient = get_int_list(need(s, "ambient", "spec ambient"), "ambient entry");
        const ordered_json& rows = need(s, "degrees", "spec degrees");
        if (!rows.is_array()) throw RequestError("request: degrees must be an array of rows");
        for (const auto& row : rows) {
            std::vector<int> v = get_int_list(row, "degree entry");
            ci.degrees.emplace_back(v.begin(), v.end());
        }
        r.spec = std::move(ci);
    } else if (kind == "toric") {
        ToricSpec t;
        t.dim = get_int(need(s, "dim", "spec dim"), "dim");
        const ordered_json& sup = need(s, "supports", "spec supports");
        if (!sup.is_array()) throw RequestError("request: supports must be an array of point sets");
        for (const auto& set : sup) {
            if (!set.is_array()) throw RequestError("request: each support must be a point array");
            SupportSet ss;
            ss.dim = t.dim;
            for (const auto& pt : set) {
                std::vector<int> v = get_int_list(pt, "support coordinate");
                ss.points.emplace_back(v.begin(), v.end());
            }
            t.supports.push_back(std::move(ss));
        }
        r.spec = std::move(t);
    } else if (kind == "game") {
        std::vector<int> format = get_int_list(need(s, "format", "spec format"), "format entry");
        GameSpec g;
        for (int f : format) g.k.push_back(f - 1);  // entries are strategy counts
        r.spec = std::move(g);
    } else if (kind == "graph") {
        GraphSpec g;
        g.ell = get_int(need(s, "vertices", "spec vertices"), "vertices");
        if (auto it = s.find("edges"); it != s.end()) {
            if (!it->is_array()) throw RequestError("request: edges must be an array of pairs");
            for (const auto& e : *it) {
                std::vector<int> v = get_int_list(e, "edge endpoint");
                if (v.size() != 2) throw RequestError("request: each edge needs two endpoints");
                g.edges.push_back({v[0], v[1]});
            }
        }
        r.spec = std::move(g);
    } else {
        throw RequestError("request: unknown spec kind \"" + kind + "\"");
    }

    r.query = get_string(need(j, "query", "query"), "query");
    if (r.query != "multidegree" && r.query != "genus" && r.query != "hurwitz" &&
        r.query != "chow")
        throw RequestError("request: unsupported query \"" + r.query + "\"");

    if (auto it = j.find("alpha"); it != j.end()) r.alpha = get_int_list(*it, "alpha entry");
    if (auto it = j.find("beta"); it != j.end()) r.beta = get_int_list(*it, "beta entry");

    if (auto it = j.find("options"); it != j.end()) {
        if (!it->is_object()) throw RequestError("request: options must be an object");
        if (auto m = it->find("genus_mode"); m != it->end()) {
            std::string v = get_string(*m, "genus_mode");
            if (v == "raw")
                r.mode = GenusMode::Raw;
            else if (v == "gated")
                r.mode = GenusMode::Gated;
            else
                throw RequestError("request: genus_mode must be raw or gated");
        }
        if (auto o = it->find("output"); o != it->end()) {
            std::string v = get_string(*o, "output");
            if (v != "table" && v != "json")
                throw RequestError("request: output must be table or json");
            r.output = v;
        }
    }
    return r;
}

Response run_request(const Request& req) {
    Dispatch d = make_dispatch(req);

    std::ostringstream table;
    ordered_json out;
    out["schema"] = 1;
    out["kind"] = d.kind;
    out["query"] = req.query;
    out["ambient"] = d.amb.dims();
    out["codim"] = d.codim;
    table << "kind: " << d.kind << "\n";
    table << "query: " << req.query << "\n";
    table << "ambient: " << paren_list(d.amb.dims()) << "\n";
    table << "codim: " << d.codim << "\n";

    GenusMode mode = req.mode.value_or(d.default_mode);

    auto multidegree_of = [&]() -> ChowClass {
        if (d.kind == "complete_intersection") return multidegree_ci(d.n, d.degrees);
        if (d.kind == "toric") return d.calc->multidegree();
        if (d.kind == "game") return game_multidegree(*d.game);
        return multidegree_ci(d.n, d.degrees);  // graph: same generic route
    };
    auto hurwitz_of = [&](const Exp& alpha) -> DegreeReport {
        if (d.kind == "complete_intersection") return hurwitz_degree_ci(d.n, d.degrees, alpha);
        if (d.kind == "graph") return graph_hurwitz_degree(*d.graph, alpha);
        if (d.kind == "game" && alpha == game_alpha(*d.game)) return game_degree_report(*d.game);
        if (d.kind == "game") return game_calc(d).hurwitz_degree(alpha);
        return d.calc->hurwitz_degree(alpha);
    };

    if (req.query == "multidegree") {
        ChowClass md = multidegree_of();
        table << "multidegree: " << to_string(md) << "\n";
        out["multidegree"] = class_json(md);
        if (d.kind == "toric") {
            std::vector<Polytope> hulls;
            for (int i = 0; i < d.amb.ell(); ++i) hulls.push_back(d.calc->newton_polytope(i));
            VolumeForm vf = volume_polynomial(hulls);
            table << "volume_polynomial: " << to_string(vf) << "\n";
            out["volume_polynomial"] = volume_json(vf);
        }
    } else if (req.query == "genus") {
        table << "mode: " << mode_name(mode) << "\n";
        out["mode"] = mode_name(mode);
        auto genus_at = [&](const Exp& beta) -> Int {
            if (d.kind == "toric") return d.calc->genus(beta, mode);
            if (d.kind == "game") return game_calc(d).genus(beta, mode);
            return genus_ci(d.n, d.degrees, beta, mode);
        };
        if (req.beta) {
            check_direction_shape(d, *req.beta, "beta");
            Int g = genus_at(*req.beta);
            table << "beta: " << paren_list(*req.beta) << "\n";
            table << "genus: " << g << "\n";
            out["beta"] = *req.beta;
            out["genus"] = json_int(g);
        } else {
            ChowClass gp = d.kind == "toric"  ? d.calc->genus_polynomial(mode)
                           : d.kind == "game" ? game_calc(d).genus_polynomial(mode)
                                              : genus_polynomial_ci(d.n, d.degrees, mode);
            table << "genus_polynomial: " << to_string(gp) << "\n";
            out["genus_polynomial"] = class_json(gp);
        }
    } else if (req.query == "hurwitz") {
        if (req.alpha) {
            check_direction_shape(d, *req.alpha, "alpha");
            DegreeReport rep = hurwitz_of(*req.alpha);
            report_table(table, rep);
            out["report"] = report_json(rep);
        } else {
            auto alphas = exponents_of_degree(d.codim, d.amb.dims());
            table << "rows: " << alphas.size() << "\n";
            table << "index | delta | monomial | degree | flags\n";
            ordered_json rows = ordered_json::array();
            std::string sweep_note;
            int index = 0;
            for (const Exp& alpha : alphas) {
                DegreeReport rep = hurwitz_of(alpha);
                if (!rep.note.empty()) sweep_note = rep.note;
                ++index;
                table << index << " | " << rep.delta << " | " << monomial_string(alpha) << " | "
                      << paren_list(rep.degree) << " | " << rep.flags.to_string() << "\n";
                ordered_json row;
                row["index"] = index;
                row["delta"] = json_int(rep.delta);
                row["alpha"] = alpha;
                row["monomial"] = monomial_string(alpha);
                row["degree"] = json_int_list(rep.degree);
                row["flags"] = flag_tokens(rep.flags);
                rows.push_back(std::move(row));
            }
            out["rows"] = std::move(rows);
            if (!sweep_note.empty()) {
                table << "note: " << sweep_note << "\n";
                out["note"] = sweep_note;
            }
        }
    } else {  // chow
        if (d.codim < 1)
            throw RequestError("request: chow query needs positive codimension");
        ChowClass md = multidegree_of();
        if (req.alpha) {
            check_direction_shape(d, *req.alpha, "alpha");
            if (exp_total(*req.alpha) != d.codim - 1)
                throw std::invalid_argument("chow_degrees: |alpha| must be codim - 1");
            std::vector<Int> degs = chow_degrees(md, *req.alpha);
            table << "alpha: " << paren_list(*req.alpha) << "\n";
            table << "degrees: " << paren_list(degs) << "\n";
            out["alpha"] = *req.alpha;
            out["degrees"] = json_int_list(degs);
        } else {
            auto alphas = exponents_of_degree(d.codim - 1, d.amb.dims());
            table << "rows: " << alphas.size() << "\n";
            table << "index | monomial | degrees\n";
            ordered_json rows = ordered_json::array();
            int index = 0;
            for (const Exp& alpha : alphas) {
                std::vector<Int> degs = chow_degrees(md, alpha);
                ++index;
                table << index << " | " << monomial_string(alpha) << " | " << paren_list(degs)
                      << "\n";
                ordered_json row;
                row["index"] = index;
                row["alpha"] = alpha;
                row["monomial"] = monomial_string(alpha);
                row["degrees"] = json_int_list(degs);
                rows.push_back(std::move(row));
            }
            out["rows"] = std::move(rows);
        }
    }

    Response resp;
    resp.table = table.str();
    resp.json = out.dump(2) + "\n";
    return resp;
}

}  // namespace hurwitz
