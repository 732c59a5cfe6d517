// hurwitzcalc: exact multidegree / genus / Hurwitz-degree calculator for
// subvarieties of products of projective spaces, presented as complete
// intersections, lattice supports, game formats, or incidence graphs.
//
//   hurwitzcalc <query> [flags]          query: multidegree|genus|hurwitz|chow
//   hurwitzcalc --input request.json     full JSON request document
//   echo '{...}' | hurwitzcalc           same document on stdin
//
// Exit codes: 0 success, 2 validation/parse error, 3 spec rejection
// (input outside the supported class, e.g. a non-saturated lattice support).

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hurwitz/request.hpp"
#include "json.hpp"

namespace {

using hurwitz::Request;
using hurwitz::RequestError;
using ordered_json = nlohmann::ordered_json;

std::vector<int> parse_int_list(const std::string& text, char sep, const char* what) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw RequestError(std::string("request: cannot parse ") + what + " entry \"" +
                               item + "\"");
        }
    }
    if (out.empty()) throw RequestError(std::string("request: empty ") + what);
    return out;
}

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Flags {
    std::string query;
    std::string input;
    std::string ambient, degree_matrix;
    int dim = 0;
    std::string toric;
    std::string game;
    int vertices = 0;
    std::string graph;
    bool graph_given = false;
    std::string alpha, beta, mode, format;
};

// Build a Request from shorthand flags alone (no JSON document).
Request request_from_flags(const Flags& f) {
    Request r;
    int spec_kinds = 0;
    if (!f.degree_matrix.empty()) ++spec_kinds;
    if (!f.toric.empty()) ++spec_kinds;
    if (!f.game.empty()) ++spec_kinds;
    if (f.graph_given || f.vertices > 0) ++spec_kinds;
    if (spec_kinds != 1)
        throw RequestError("request: exactly one of --degree-matrix/--toric/--game/--graph");

    if (!f.degree_matrix.empty()) {
        if (f.ambient.empty())
            throw RequestError("request: --degree-matrix needs --ambient");
        hurwitz::CiSpec ci;
        ci.ambient = parse_int_list(f.ambient, ',', "ambient");
        std::string row;
        std::istringstream rows(f.degree_matrix);
        while (std::getline(rows, row, ';')) {
            std::vector<int> v = parse_int_list(row, ',', "degree row");
            ci.degrees.emplace_back(v.begin(), v.end());
        }
        r.spec = std::move(ci);
    } else if (!f.toric.empty()) {
        if (f.dim <= 0) throw RequestError("request: --toric needs --dim");
        hurwitz::ToricSpec t;
        t.dim = f.dim;
        std::string set;
        std::istringstream sets(f.toric);
        while (std::getline(sets, set, ';')) {
            hurwitz::SupportSet ss;
            ss.dim = f.dim;
            std::string pt;
            std::istringstream pts(set);
            while (pts >> pt) {
                std::vector<int> v = parse_int_list(pt, ',', "support point");
                ss.points.emplace_back(v.begin(), v.end());
            }
            if (ss.points.empty()) throw RequestError("request: empty support set");
            t.supports.push_back(std::move(ss));
        }
        r.spec = std::move(t);
    } else if (!f.game.empty()) {
        hurwitz::GameSpec g;
        for (int fmt : parse_int_list(f.game, ',', "game format")) g.k.push_back(fmt - 1);
        r.spec = std::move(g);
    } else {
        if (f.vertices <= 0) throw RequestError("request: --graph needs --vertices");
        hurwitz::GraphSpec g;
        g.ell = f.vertices;
        if (!f.graph.empty()) {
            std::string edge;
            std::istringstream edges(f.graph);
            while (std::getline(edges, edge, ',')) {
                std::vector<int> v = parse_int_list(edge, '-', "edge");
                if (v.size() != 2) throw RequestError("request: each edge needs two endpoints");
                g.edges.push_back({v[0], v[1]});
            }
        }
        r.spec = std::move(g);
    }
    return r;
}

// Flags layered on top of the Request (from JSON or shorthand).
void apply_overrides(Request& r, const Flags& f) {
    if (!f.query.empty()) r.query = f.query;
    if (!f.alpha.empty()) r.alpha = parse_int_list(f.alpha, ',', "alpha");
    if (!f.beta.empty()) r.beta = parse_int_list(f.beta, ',', "beta");
    if (!f.mode.empty()) {
        if (f.mode == "raw")
            r.mode = hurwitz::GenusMode::Raw;
        else if (f.mode == "gated")
            r.mode = hurwitz::GenusMode::Gated;
        else
            throw RequestError("request: --mode must be raw or gated");
    }
    if (!f.format.empty()) {
        if (f.format != "table" && f.format != "json")
            throw RequestError("request: --format must be table or json");
        r.output = f.format;
    }
    if (r.query.empty()) throw RequestError("request: no query given");
    if (r.query != "multidegree" && r.query != "genus" && r.query != "hurwitz" &&
        r.query != "chow")
        throw RequestError("request: unsupported query \"" + r.query + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact multidegrees, multisectional genus polynomials and Hurwitz degree\n"
        "vectors for subvarieties of products of projective spaces."};
    app.name("hurwitzcalc");

    Flags f;
    app.add_option("QUERY", f.query, "multidegree | genus | hurwitz | chow");
    app.add_option("--query", f.query, "same as the positional query");
    app.add_option("-i,--input", f.input, "JSON request document ('-' for stdin)");
    app.add_option("--ambient", f.ambient, "projective factor dimensions, e.g. 2,2");
    app.add_option("--degree-matrix", f.degree_matrix,
                   "complete intersection rows, e.g. '2,1;3,4'");
    app.add_option("--dim", f.dim, "lattice dimension for --toric");
    app.add_option("--toric", f.toric,
                   "support sets: points space-separated, sets ';'-separated, e.g.\n"
                   "'0,0 1,0 0,1;0,0 2,0 0,1'");
    app.add_option("--game", f.game, "strategy counts per player, e.g. 3,3,3");
    app.add_option("--vertices", f.vertices, "vertex count for --graph");
    auto* graph_opt = app.add_option("--graph", f.graph, "edges, e.g. 1-2,2-3 (may be empty)");
    graph_opt->expected(0, 1);
    app.add_option("--alpha", f.alpha, "projection direction (hurwitz/chow)");
    app.add_option("--beta", f.beta, "curve direction (genus)");
    app.add_option("--mode", f.mode, "genus mode: raw | gated");
    app.add_option("--format,--output", f.format, "output: table | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    f.graph_given = graph_opt->count() > 0;

    try {
        bool shorthand = !f.degree_matrix.empty() || !f.toric.empty() || !f.game.empty() ||
                         f.graph_given || f.vertices > 0;
        Request req;
        if (shorthand) {
            if (!f.input.empty())
                throw RequestError("request: --input conflicts with shorthand spec flags");
            req = request_from_flags(f);
        } else {
            std::string text;
            if (!f.input.empty() && f.input != "-") {
                std::ifstream in(f.input);
                if (!in) throw RequestError("request: cannot open " + f.input);
                text = read_all(in);
            } else {
                text = read_all(std::cin);
            }
            req = hurwitz::parse_request_text(text);
        }
        apply_overrides(req, f);

        hurwitz::Response resp = hurwitz::run_request(req);
        std::cout << (req.output == "json" ? resp.json : resp.table);
        return 0;
    } catch (const hurwitz::SpecRejection& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 3;
    } catch (const RequestError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
