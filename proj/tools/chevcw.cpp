#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chev/report.hpp"
#include "chev/selftest.hpp"

using namespace chev;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, BadInput = 2, Capability = 3 };

struct Options {
    std::string type;
    int rank = 0;
    std::string ring;
    std::string rep;
    std::uint64_t seed = 1;
    bool short_form = false;
    bool as_json = false;
    std::string input;
    std::string matrix;
    int level = 0;
    bool theta = false;
    std::string scope = "quick";
    std::uint64_t selftest_seed = 2024;
};

json read_payload(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad JSON input: ") + e.what());
    }
}

// --type A --rank 2, --type A2, or the same fields of a payload
const RootSystem& resolve_type(const Options& o, const json& payload) {
    std::string type = o.type;
    int rank = o.rank;
    if (type.empty() && payload.is_object() && payload.contains("type")) type = payload.at("type").get<std::string>();
    if (rank == 0 && payload.is_object() && payload.contains("rank")) rank = payload.at("rank").get<int>();
    if (type.empty()) throw InvalidInput("root system type is required (--type)");
    if (type.size() > 1) {
        if (rank != 0) throw InvalidInput("give the rank either in the label or with --rank, not both");
        return RootSystem::parse(type);
    }
    if (rank == 0) throw InvalidInput("rank is required (--rank)");
    return RootSystem::get(static_cast<char>(std::toupper(static_cast<unsigned char>(type[0]))), rank);
}

Ring ring_from(const json& j) {
    if (j.is_string()) return Ring::parse(j.get<std::string>());
    return Ring::from_json(j);
}

Ring resolve_ring(const Options& o, const json& payload) {
    if (!o.ring.empty()) return Ring::parse(o.ring);
    if (payload.is_object() && payload.contains("ring")) return ring_from(payload.at("ring"));
    if (payload.is_object() && payload.contains("matrix") && payload.at("matrix").is_object() && payload.at("matrix").contains("ring"))
        return ring_from(payload.at("matrix").at("ring"));
    return Ring::prime_field(5);
}

Matrix matrix_from(const json& j, const Ring& r) {
    if (j.is_object()) {
        json m = j;
        if (m.contains("ring") && m.at("ring").is_string()) m["ring"] = ring_from(m.at("ring")).to_json();
        if (!m.contains("ring")) m["ring"] = r.to_json();
        return Matrix::from_json(m);
    }
    return Matrix::from_json({{"ring", r.to_json()}, {"rows", j}});
}

// The payload's element as a quadruple; matrices go through the SL factorization.
Quadruple payload_quadruple(const RootSystem& rs, const Ring& r, const json& p) {
    const json& in = p.contains("input") ? p.at("input") : p;
    if (in.contains("quadruple")) return quadruple_from_json(in.at("quadruple"), rs, r);
    if (in.contains("word")) {
        const GenWord w = word_from_json(in.at("word"), rs, r);
        try {
            return split_alternating(rs, w);
        } catch (const InvalidInput&) {
            if (rs.type() != 'A') throw;
            // type A: go through the matrix
            Quadruple q = factor_sl(Rep::get(rs, RepKind::NaturalA).eval(GenWord{w.tokens, 1}, r));
            q.center = w.center;
            return q;
        }
    }
    if (in.contains("matrix")) {
        const Matrix m = matrix_from(in.at("matrix"), r);
        if (m.rows() != rs.rank() + 1 || rs.type() != 'A') throw InvalidInput("a matrix input needs type A_{n-1}");
        return factor_sl(m);
    }
    throw InvalidInput("input needs one of \"quadruple\", \"word\", \"matrix\"");
}

// type A_{n-1} from a matrix payload when no type was given
bool infer_from_matrix(Options& o, const json& p) {
    if (!o.type.empty() || (p.is_object() && p.contains("type"))) return false;
    const json& in = p.contains("input") ? p.at("input") : p;
    if (!in.contains("matrix")) return false;
    const json& m = in.at("matrix");
    const json& rows = m.is_object() ? m.at("rows") : m;
    if (!rows.is_array() || rows.size() < 2) throw InvalidInput("matrix must have at least 2 rows");
    o.type = "A";
    o.rank = static_cast<int>(rows.size()) - 1;
    return true;
}

RepKind resolve_rep(const Options& o, const RootSystem& rs) {
    if (o.rep.empty()) return verification_rep(rs);
    const RepKind k = Rep::parse_kind(o.rep);
    const auto ok = Rep::supported(rs);
    if (std::find(ok.begin(), ok.end(), k) == ok.end())
        throw UnsupportedRep("representation " + o.rep + " is not available for " + rs.label());
    return k;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_roots(const Options& o) {
    const RootSystem& rs = resolve_type(o, json());
    if (o.as_json)
        print_json(roots_report(rs, o.level, o.theta));
    else
        std::cout << roots_text(rs, o.level, o.theta);
    return Ok;
}

int cmd_diagram(const Options& o) {
    const RootSystem& rs = resolve_type(o, json());
    const RepKind k = o.rep.empty() ? Rep::default_kind(rs) : Rep::parse_kind(o.rep);
    std::cout << weight_diagram_dot(rs, k);
    return Ok;
}

int cmd_decompose(Options o) {
    json payload = o.input.empty() ? json::object() : read_payload(o.input);
    if (!payload.is_object()) throw InvalidInput("input must be a JSON object");
    infer_from_matrix(o, payload);
    const RootSystem& rs = resolve_type(o, payload);
    const Ring r = resolve_ring(o, payload);
    const RepKind rep = resolve_rep(o, rs);

    Quadruple q;
    const bool random = o.input.empty();
    if (random) {
        std::mt19937_64 g(o.seed);
        if (o.short_form) {
            q.u1 = random_unipotent(rs, r, g, true);
            q.v1 = random_unipotent(rs, r, g, false);
        } else {
            q = random_quadruple(rs, r, g);
        }
    } else {
        q = payload_quadruple(rs, r, payload);
    }
    if (o.short_form && (!q.u2.empty() || !q.v2.empty() || q.center != 1))
        throw InvalidInput("--short takes an element u v with u in U+ and v in U-");

    const Decomposition d = o.short_form ? decompose_short(rs, q.u1, q.v1, r) : decompose(rs, q, r);
    const GenWord original = o.short_form ? q.u1 * q.v1 : q.word();
    const VerifyResult v = verify(rs, r, rep, original, d);
    const int bound = commutator_width_bound(rs) - (o.short_form ? 1 : 0);

    json out{{"type", std::string(1, rs.type())},
             {"rank", rs.rank()},
             {"ring", r.to_json()},
             {"variant", o.short_form ? "short" : "full"},
             {"input", {{"quadruple", quadruple_to_json(q, rs, r)}}},
             {"bound", bound},
             {"verify", {{"rep", Rep::get(rs, rep).tag()}, {"result", verify_result_name(v)}}}};
    if (random) out["seed"] = o.seed;
    if (v == VerifyResult::Mismatch) {
        std::cerr << "verification failed in " << Rep::get(rs, rep).tag() << "\n";
        if (o.as_json) print_json(out);
        return Mismatch;
    }
    out["decomposition"] = d.to_json(rs, r);
    if (o.as_json) {
        print_json(out);
        return Ok;
    }
    std::cout << rs.label() << " over " << r.name();
    if (random) std::cout << " (seed " << o.seed << ")";
    std::cout << "\n";
    std::cout << "commutators: " << d.pairs.size() << " (bound " << bound << ")\n";
    std::cout << "center: " << d.center << "\n";
    std::cout << "verify " << Rep::get(rs, rep).tag() << ": " << verify_result_name(v) << "\n";
    std::cout << "conjugator: " << word_str(d.conjugator, rs, r) << "\n";
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        std::cout << "pair " << i + 1 << " a: " << word_str(d.pairs[i].a, rs, r) << "\n";
        std::cout << "pair " << i + 1 << " b: " << word_str(d.pairs[i].b, rs, r) << "\n";
    }
    return Ok;
}

int cmd_factorize(const Options& o) {
    json payload;
    if (!o.matrix.empty()) {
        try {
            payload = {{"matrix", json::parse(o.matrix)}};
        } catch (const json::exception& e) {
            throw InvalidInput(std::string("bad --matrix: ") + e.what());
        }
    } else if (!o.input.empty()) {
        payload = read_payload(o.input);
    } else {
        throw InvalidInput("factorize needs --matrix or --input");
    }
    if (!payload.is_object() || !payload.contains("matrix")) throw InvalidInput("input needs \"matrix\"");
    const Ring r = resolve_ring(o, payload);
    const Matrix m = matrix_from(payload.at("matrix"), r);
    if (m.rows() < 2 || m.rows() != m.cols()) throw InvalidInput("factorize needs a square matrix of size >= 2");
    const Quadruple q = factor_sl(m);
    const RootSystem& rs = RootSystem::get('A', m.rows() - 1);
    const Rep& nat = Rep::get(rs, RepKind::NaturalA);
    const bool exact = nat.eval(q.word(), m.ring()) == m;
    if (o.as_json) {
        json factors = json::object();
        const std::pair<const char*, const GenWord*> parts[] = {{"u1", &q.u1}, {"v1", &q.v1}, {"u2", &q.u2}, {"v2", &q.v2}};
        for (const auto& [name, w] : parts) factors[name] = nat.eval(*w, m.ring()).to_json()["rows"];
        print_json({{"ring", m.ring().to_json()},
                    {"n", m.rows()},
                    {"quadruple", quadruple_to_json(q, rs, m.ring())},
                    {"matrices", factors},
                    {"roundtrip", exact ? "exact" : "mismatch"}});
    } else {
        std::cout << "SL_" << m.rows() << "(" << m.ring().name() << ") = u1 v1 u2 v2, round trip " << (exact ? "exact" : "MISMATCH") << "\n";
        const std::pair<const char*, const GenWord*> parts[] = {{"u1", &q.u1}, {"v1", &q.v1}, {"u2", &q.u2}, {"v2", &q.v2}};
        for (const auto& [name, w] : parts) std::cout << name << ":\n" << nat.eval(*w, m.ring()).str();
    }
    return exact ? Ok : Mismatch;
}

int cmd_verify(Options o) {
    if (o.input.empty()) throw InvalidInput("verify needs --input (a decompose --json document)");
    const json payload = read_payload(o.input);
    if (!payload.is_object() || !payload.contains("decomposition")) throw InvalidInput("input needs \"decomposition\"");
    infer_from_matrix(o, payload);
    const RootSystem& rs = resolve_type(o, payload);
    const Ring r = resolve_ring(o, payload);
    const RepKind rep = resolve_rep(o, rs);
    const Quadruple q = payload_quadruple(rs, r, payload);
    const Decomposition d = Decomposition::from_json(payload.at("decomposition"), rs, r);
    const VerifyResult v = verify(rs, r, rep, q.word(), d);
    if (o.as_json)
        print_json({{"rep", Rep::get(rs, rep).tag()}, {"result", verify_result_name(v)}, {"count", d.pairs.size()}});
    else
        std::cout << rs.label() << " over " << r.name() << ", " << d.pairs.size() << " commutators, " << Rep::get(rs, rep).tag()
                  << ": " << verify_result_name(v) << "\n";
    return v == VerifyResult::Mismatch ? Mismatch : Ok;
}

int cmd_selftest(const Options& o) {
    const SelftestScope scope = parse_scope(o.scope);
    json results = json::array();
    bool all = true;
    for (int id : scope_criteria(scope)) {
        const CriterionResult c = run_criterion(id, o.selftest_seed);
        all = all && c.pass;
        if (o.as_json)
            results.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
        else
            std::cout << format_result(c) << std::endl;
    }
    if (o.as_json) print_json(results);
    return all ? Ok : Mismatch;
}

void add_type(CLI::App* sub, Options& o) {
    sub->add_option("TYPE", o.type, "root system type letter, or a label such as E6");
    sub->add_option("RANK", o.rank, "rank");
    sub->add_option("--type", o.type, "root system type letter, or a label such as E6");
    sub->add_option("--rank", o.rank, "rank");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chevcw: commutator decompositions of Chevalley group elements over stable rank 1 rings"};
    app.require_subcommand(1);
    Options o;

    auto* roots = app.add_subcommand("roots", "positive roots, companion Sigma, the pi~ partition");
    add_type(roots, o);
    roots->add_option("--level", o.level, "also list Sigma_k and Delta_k for this k");
    roots->add_flag("--theta", o.theta, "report Theta for pi~");
    roots->add_flag("--json", o.as_json, "JSON output");

    auto* diagram = app.add_subcommand("diagram", "weight diagram of a module in DOT");
    add_type(diagram, o);
    diagram->add_option("--rep", o.rep, "natural_A, natural_C, vector_B, vector_D, adjoint, minuscule");

    auto* dec = app.add_subcommand("decompose", "decompose an element into commutators and verify");
    add_type(dec, o);
    dec->add_option("--ring", o.ring, "ring: F_5, Z/9, F_2^3, Z, or a JSON descriptor");
    dec->add_option("--rep", o.rep, "module used for verification");
    dec->add_option("--seed", o.seed, "seed for a random factored element");
    dec->add_option("--input", o.input, "JSON file with \"quadruple\", \"word\" or \"matrix\" (- for stdin)");
    dec->add_flag("--short", o.short_form, "element u v, one commutator fewer");
    dec->add_flag("--json", o.as_json, "JSON output");

    auto* fac = app.add_subcommand("factorize", "write an SL_n matrix as u1 v1 u2 v2");
    fac->add_option("--ring", o.ring, "ring of the matrix entries");
    fac->add_option("--matrix", o.matrix, "matrix as a JSON array of rows");
    fac->add_option("--input", o.input, "JSON file with \"matrix\" (- for stdin)");
    fac->add_flag("--json", o.as_json, "JSON output");

    auto* ver = app.add_subcommand("verify", "check a decomposition against its input");
    add_type(ver, o);
    ver->add_option("--ring", o.ring, "ring");
    ver->add_option("--rep", o.rep, "module used for verification");
    ver->add_option("--input", o.input, "decompose --json output or an equivalent document (- for stdin)");
    ver->add_flag("--json", o.as_json, "JSON output");

    auto* self = app.add_subcommand("selftest", "acceptance suite");
    self->add_option("scope", o.scope, "quick, full or e7nice");
    self->add_option("--seed", o.selftest_seed, "seed");
    self->add_flag("--json", o.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (*roots) return cmd_roots(o);
        if (*diagram) return cmd_diagram(o);
        if (*dec) return cmd_decompose(o);
        if (*fac) return cmd_factorize(o);
        if (*ver) return cmd_verify(o);
        if (*self) return cmd_selftest(o);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const RingCapabilityError& e) {
        std::cerr << "ring capability error: " << e.what() << "\n";
        return Capability;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON: " << e.what() << "\n";
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Mismatch;
    }
    return Ok;
}
