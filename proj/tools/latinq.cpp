#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latinq/abelian_group.hpp"
#include "latinq/affine.hpp"
#include "latinq/cocycle_solver.hpp"
#include "latinq/extension.hpp"
#include "latinq/io.hpp"
#include "latinq/isomorphism.hpp"
#include "latinq/magma.hpp"
#include "latinq/onoi.hpp"
#include "latinq/search.hpp"

namespace {

using namespace latinq;

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

MagmaTable load_table(const std::string& path) {
    auto in = open_in(path);
    return io::read_table(in);
}

std::string witness_string(const MedialityWitness& w) {
    std::ostringstream os;
    os << "(" << w.a << "," << w.b << "," << w.c << "," << w.d << ")";
    return os.str();
}

struct Properties {
    bool latin, idempotent, left_distributive, quandle;
    std::optional<MedialityWitness> medial_witness;
};

// The mediality scan is skipped when `witness` already refutes it.
Properties properties(const MagmaTable& q, std::optional<MedialityWitness> witness = std::nullopt) {
    Properties p{};
    p.latin = is_latin(q);
    p.idempotent = is_idempotent(q);
    p.left_distributive = is_left_distributive(q);
    p.quandle = p.idempotent && p.left_distributive && left_translations_bijective(q);
    p.medial_witness = witness && witness->holds_in(q) ? witness : medial_witness(q);
    return p;
}

void print_properties(std::ostream& os, const MagmaTable& q, const Properties& p) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "order " << q.order() << "\n";
    os << "latin " << yn(p.latin) << "\n";
    os << "idempotent " << yn(p.idempotent) << "\n";
    os << "left-distributive " << yn(p.left_distributive) << "\n";
    os << "quandle " << yn(p.quandle) << "\n";
    os << "medial " << yn(!p.medial_witness);
    if (p.medial_witness) os << " witness " << witness_string(*p.medial_witness);
    os << "\n";
}

OnoiRing pick_ring(int index, const std::string& file) {
    if (!file.empty()) {
        auto in = open_in(file);
        auto o = io::read_onoi_ring(in);
        if (auto v = validate_onoi_ring(o)) throw std::runtime_error("ring file: " + v->axiom + " fails");
        return o;
    }
    const auto rings = four_element_rings();
    if (index < 0 || index > 3) throw std::runtime_error("--ring must be 0..3");
    return rings[static_cast<std::size_t>(index)];
}

void require_cube(const OnoiRing& o) {
    if (!find_cube_nonzero(o)) throw std::runtime_error("ring has no e with e(ee) != 0");
}

int cmd_verify(const std::string& path, const std::vector<std::string>& props) {
    const auto q = load_table(path);
    const auto p = properties(q);
    print_properties(std::cout, q, p);
    for (const auto& name : props) {
        bool ok;
        if (name == "latin") ok = p.latin;
        else if (name == "idempotent") ok = p.idempotent;
        else if (name == "left-distributive") ok = p.left_distributive;
        else if (name == "quandle") ok = p.quandle;
        else if (name == "medial") ok = !p.medial_witness;
        else if (name == "non-medial") ok = p.medial_witness.has_value();
        else throw std::runtime_error("unknown property " + name);
        if (!ok) return 1;
    }
    return 0;
}

struct ConstructArgs {
    std::string kind;
    int ring = 1;
    std::string ring_file;
    std::string left, right;
    std::string group;
    std::string psi_file;
    int psi_class = 1;
    std::string out;
};

int cmd_construct(const ConstructArgs& a) {
    MagmaTable table;
    std::optional<MedialityWitness> seed;
    std::string note;
    if (a.kind == "onoi-affine") {
        table = aff_of_onoi(pick_ring(a.ring, a.ring_file));
    } else if (a.kind == "extension-64") {
        const auto o = pick_ring(a.ring, a.ring_file);
        require_cube(o);
        const auto mu = split_mapping(o);
        const auto spec = onoi_extension_spec(mu);
        table = build_extension(spec);
        seed = lifted_medial_witness(spec, table);
        note = "Q(O^2,O,mu) with mu((a,b),(c,d),(u,v)) = b(du)";
    } else if (a.kind == "extension-256") {
        const auto o = pick_ring(a.ring, a.ring_file);
        require_cube(o);
        const auto os = power_sigma(o, 2, {1, 0});
        const auto spec = onoi_extension_spec(canonical_mapping(os));
        table = build_extension(spec);
        seed = lifted_medial_witness(spec, table);
        note = "Q(O^s,O^s,mu) with s=(1 2) and mu(a,b,c) = a(bc)";
    } else if (a.kind == "product") {
        if (a.left.empty() || a.right.empty()) throw std::runtime_error("product needs --left and --right");
        table = direct_product(load_table(a.left), load_table(a.right));
    } else if (a.kind == "affine") {
        if (a.group.empty()) throw std::runtime_error("affine needs --group");
        const auto g = io::parse_group(a.group);
        EndoMatrix psi;
        if (!a.psi_file.empty()) {
            auto in = open_in(a.psi_file);
            psi = io::read_endo(in, g);
        } else {
            const auto reps = admissible_class_reps(g);
            if (a.psi_class < 1 || static_cast<std::size_t>(a.psi_class) > reps.size())
                throw std::runtime_error(g.name() + " has " + std::to_string(reps.size()) + " admissible classes");
            psi = reps[static_cast<std::size_t>(a.psi_class - 1)];
        }
        table = affine_quandle(g, psi);
        note = "psi " + psi.to_string();
    } else {
        throw std::runtime_error("unknown kind " + a.kind);
    }
    auto out = open_out(a.out);
    io::write_table(out, table);
    if (!note.empty()) std::cout << note << "\n";
    print_properties(std::cout, table, properties(table, seed));
    return 0;
}

int cmd_solve(const std::string& quandle, const std::string& group, const std::string& psi_file, const std::string& out_path,
              bool cross_check) {
    const auto f = load_table(quandle);
    const auto g = io::parse_group(group);
    auto pin = open_in(psi_file);
    const auto psi = io::read_endo(pin, g);
    const auto sys = assemble(f, g, psi);
    SolveOptions opts;
    opts.cross_check_lifting = cross_check;
    const auto sol = solve_ZLD(sys, opts);
    const auto nm = nonmedial_generator(f, g, psi, sol.generators);

    auto out = open_out(out_path);
    out << "# Z_LD generating set\n";
    out << "# base-order " << f.order() << " group " << g.name() << " psi " << psi.to_string() << "\n";
    out << "# unknowns " << sol.unknowns << " equations " << sol.equations << " distinct-equations "
        << sol.distinct_equations << "\n";
    out << "# generators " << sol.generators.size() << " log2-size " << sol.log2_size << "\n";
    if (sol.lifting_agrees) out << "# lifting-cross-check " << (*sol.lifting_agrees ? "agree" : "DISAGREE") << "\n";
    out << "# nonmedial-generator " << (nm ? std::to_string(nm->index) + " " + nm->witness.describe() : "none") << "\n";
    ModMatrix kernel(sys.matrix.exponent(), sys.matrix.cols());
    for (const auto& v : sol.raw_kernel) kernel.add_row(v);
    out << "kernel\n";
    io::write_mod_matrix(out, kernel);
    for (std::size_t i = 0; i < sol.generators.size(); ++i) {
        out << "generator " << i << "\n";
        io::write_cocycle(out, sol.generators[i]);
    }
    std::cout << "generators " << sol.generators.size() << " log2-size " << sol.log2_size << " nonmedial "
              << (nm ? "yes" : "no") << "\n";
    return 0;
}

int cmd_search(int k, bool long_run, unsigned jobs, const std::string& report_path, bool quiet) {
    SearchOptions opts;
    opts.long_run = long_run;
    opts.jobs = jobs;
    if (!quiet) opts.progress = [](const std::string& s) { std::cerr << s << "\n"; };
    const auto rep = search(k, opts);
    if (!report_path.empty()) {
        auto out = open_out(report_path);
        write_report(out, rep);
    }
    std::cout << "order " << (1u << k) << " verdict " << (rep.verdict() ? "YES" : "NO") << " records "
              << rep.records.size() << " witnesses " << rep.witness_count() << " seconds " << rep.seconds << "\n";
    return 0;
}

int cmd_isomorphic(const std::string& p, const std::string& q) {
    const auto a = load_table(p), b = load_table(q);
    const auto f = is_isomorphic(a, b);
    if (!f) {
        std::cout << "not isomorphic\n";
        return 1;
    }
    std::cout << "isomorphic\n";
    for (std::size_t i = 0; i < f->size(); ++i) std::cout << (i ? " " : "") << (*f)[i];
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latin quandles of 2-power order"};
    app.require_subcommand(1);

    std::string verify_path;
    std::vector<std::string> verify_props;
    auto* verify = app.add_subcommand("verify", "check the quandle predicates of a table");
    verify->add_option("table", verify_path, "table file")->required();
    verify->add_option("--property", verify_props,
                       "exit 1 unless these hold: latin idempotent left-distributive quandle medial non-medial");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a quandle table");
    construct->add_option("kind", ca.kind, "onoi-affine | extension-64 | extension-256 | product | affine")
        ->required()
        ->check(CLI::IsMember({"onoi-affine", "extension-64", "extension-256", "product", "affine"}));
    construct->add_option("--ring", ca.ring, "4-element Onoi ring: 0 zero, 1-3 the nonzero rings")->capture_default_str();
    construct->add_option("--ring-file", ca.ring_file, "Onoi ring file (overrides --ring)");
    construct->add_option("--left", ca.left, "left factor table (product)");
    construct->add_option("--right", ca.right, "right factor table (product)");
    construct->add_option("--group", ca.group, "group such as Z2^3 or Z4^2 (affine)");
    construct->add_option("--psi", ca.psi_file, "automorphism matrix file (affine)");
    construct->add_option("--psi-class", ca.psi_class, "admissible class index, 1-based (affine)")->capture_default_str();
    construct->add_option("--out", ca.out, "output table file")->required();

    std::string sq, sg, sp, so;
    bool cross = false;
    auto* solve = app.add_subcommand("solve-cocycles", "generating set of Z_LD(F, A, psi)");
    solve->add_option("--quandle", sq, "base table file")->required();
    solve->add_option("--group", sg, "fiber group such as Z2^2")->required();
    solve->add_option("--psi", sp, "automorphism matrix file")->required();
    solve->add_option("--out", so, "output file")->required();
    solve->add_flag("--cross-check", cross, "compare against the integer lifting kernel");

    int k = 0;
    bool long_run = false, quiet = false;
    unsigned jobs = 1;
    std::string report;
    auto* srch = app.add_subcommand("search", "exhaustive search at order 2^k");
    srch->add_option("--k", k, "exponent, 4..7")->required()->check(CLI::Range(4, 7));
    srch->add_flag("--long-run", long_run, "allow k = 7");
    srch->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    srch->add_option("--report", report, "report file");
    srch->add_flag("--quiet", quiet, "no progress output");

    std::string iso_a, iso_b;
    auto* iso = app.add_subcommand("isomorphic", "find an isomorphism between two tables");
    iso->add_option("first", iso_a)->required();
    iso->add_option("second", iso_b)->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*verify) return cmd_verify(verify_path, verify_props);
        if (*construct) return cmd_construct(ca);
        if (*solve) return cmd_solve(sq, sg, sp, so, cross);
        if (*srch) return cmd_search(k, long_run, jobs, report, quiet);
        if (*iso) return cmd_isomorphic(iso_a, iso_b);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
