#ifndef HURWITZ_REQUEST_HPP
#define HURWITZ_REQUEST_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hurwitz/apps.hpp"
#include "hurwitz/ci.hpp"
#include "hurwitz/toric.hpp"

namespace hurwitz {

// Malformed or shape-inconsistent request (CLI exit code 2).  Lattice
// rejections keep their own type, SpecRejection (CLI exit code 3).
struct RequestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CiSpec {
    std::vector<int> ambient;  // n_1, ..., n_l
    DegreeMatrix degrees;      // one row per defining divisor
};

struct Request {
    std::variant<CiSpec, ToricSpec, GameSpec, GraphSpec> spec;
    std::string query;              // multidegree | genus | hurwitz | chow
    std::optional<Exp> alpha;       // hurwitz / chow direction
    std::optional<Exp> beta;        // genus direction
    std::optional<GenusMode> mode;  // default: raw for ci/graph, gated for toric/game
    std::string output = "table";   // table | json
};

// Parses a request document:
//   {"schema": 1,
//    "spec": {"kind": "complete_intersection" | "toric" | "game" | "graph", ...},
//    "query": "...", "alpha": [...], "beta": [...],
//    "options": {"genus_mode": "raw"|"gated", "output": "table"|"json"}}
// Spec payloads: complete_intersection {ambient, degrees}, toric {dim,
// supports}, game {format}, graph {vertices, edges}.
Request parse_request_text(const std::string& text);

struct Response {
    std::string table;  // human-readable rendering
    std::string json;   // canonical machine rendering, newline-terminated
};

// Computes both renderings of the answer.  Throws RequestError for unusable
// queries, SpecRejection for rejected lattice data, std::invalid_argument for
// out-of-range directions, std::logic_error for internal inconsistencies.
Response run_request(const Request& req);

}  // namespace hurwitz

#endif
