// vbraid: command-line front end.
//
// Subcommands: verify, image, group, invariants, markov, kernel-demo.
// Exit codes: 0 success / check confirmed, 1 mathematical check failed,
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vbraid/serialize.hpp"

namespace {

using namespace vbraid;

int tietze_budget_from_env() {
    if (const char* s = std::getenv("VBRAID_TIETZE_BUDGET")) {
        try {
            return std::max(0, std::stoi(s));
        } catch (...) {
            throw error("VBRAID_TIETZE_BUDGET: not an integer");
        }
    }
    return 10000;
}

RepKind parse_kind(const std::string& s) {
    auto k = rep_kind_from_name(s);
    if (!k) throw CLI::ValidationError("--rep", "unknown representation kind '" + s + "'");
    return *k;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

int cmd_verify(const std::string& rep, int n, bool as_json) {
    RepKind kind = parse_kind(rep);
    RelationReport report = verify_relations(kind, n);
    if (as_json) {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& e : report.entries) {
            std::cout << e.family << " [";
            for (size_t i = 0; i < e.indices.size(); ++i)
                std::cout << (i ? "," : "") << e.indices[i];
            std::cout << "]: " << (e.pass ? "holds" : "fails");
            if (!e.pass && !e.witness_generator.empty())
                std::cout << "  (witness " << e.witness_generator << ": " << e.lhs_image
                          << " vs " << e.rhs_image << ")";
            std::cout << "\n";
        }
        std::cout << "defining relations: " << (report.defining_ok ? "all hold" : "FAILED") << "\n";
        auto show = [](const std::optional<bool>& v) {
            return !v ? std::string("no instances") : (*v ? std::string("holds") : std::string("fails"));
        };
        std::cout << "F1: " << show(report.f1_holds) << "\nF2: " << show(report.f2_holds) << "\n";
        std::cout << (report.matches_expectations() ? "OK" : "MISMATCH") << "\n";
    }
    return report.matches_expectations() ? 0 : 1;
}

int cmd_image(const std::string& rep, int n, const std::string& word, const std::string& gen,
              bool as_json) {
    RepKind kind = parse_kind(rep);
    Endomorphism e = rep_image(kind, n, parse_braid(word, n));
    if (!gen.empty()) {
        auto s = e.alphabet()->find(gen);
        if (!s) {
            std::ostringstream names;
            for (Symbol sym : e.alphabet()->symbols()) names << ' ' << e.alphabet()->name(sym);
            throw error("unknown generator '" + gen + "'; generators are:" + names.str());
        }
        if (as_json)
            std::cout << json{{"generator", gen}, {"image", print_word(e.image(*s))}}.dump(2) << "\n";
        else
            std::cout << gen << " -> " << print_word(e.image(*s)) << "\n";
        return 0;
    }
    if (as_json) std::cout << image_table_json(e).dump(2) << "\n";
    else std::cout << image_table_text(e);
    return 0;
}

int cmd_group(const std::string& rep, const std::string& braid_text, int n,
              const std::string& diagram_file, bool layered, bool simplify, bool as_json,
              bool ascii) {
    RepKind kind = parse_kind(rep);
    Presentation p;
    if (!diagram_file.empty() && !braid_text.empty())
        throw CLI::ValidationError("--diagram", "give exactly one of --braid / --diagram");
    if (!diagram_file.empty()) {
        Diagram dia = diagram_from_json(load_json_file(diagram_file));
        switch (kind) {
            case RepKind::SW: p = generalized_alexander(dia, false); break;
            case RepKind::PsiWelded: p = generalized_alexander(dia, true); break;
            case RepKind::M: p = diagram_group_M(dia); break;
            case RepKind::A: p = wirtinger(dia); break;
            default:
                throw CLI::ValidationError("--rep", "diagram builders exist for A, SW, PSI, M");
        }
        if (layered) throw CLI::ValidationError("--layered", "only applies to --braid with --rep M");
    } else {
        BraidWord braid = parse_braid(braid_text, n);
        if (layered) {
            if (kind != RepKind::M)
                throw CLI::ValidationError("--layered", "only applies to --rep M");
            p = layered_presentation(braid);
        } else {
            p = link_group(kind, braid);
        }
    }
    bool exhausted = false;
    if (simplify) {
        SimplifyResult r = tietze_simplify(p, tietze_budget_from_env());
        p = std::move(r.presentation);
        exhausted = r.budget_exhausted;
    }
    if (as_json) std::cout << to_json(p).dump(2) << "\n";
    else std::cout << print_presentation(p, ascii) << "\n";
    if (exhausted) std::cerr << "warning: simplification budget exhausted\n";
    return 0;
}

int cmd_invariants(const std::string& file, bool as_json) {
    Presentation p = presentation_from_json(load_json_file(file));
    InvariantReport rep = invariants_of(p);
    if (as_json) std::cout << to_json(rep).dump(2) << "\n";
    else std::cout << rep.str() << "\n";
    return 0;
}

int cmd_markov(const std::string& rep, const std::string& braid_text, int n,
               const std::string& moves_text, bool all_moves, bool as_json) {
    RepKind kind = parse_kind(rep);
    BraidWord braid = parse_braid(braid_text, n);
    std::vector<MarkovMove> moves;
    if (all_moves) {
        moves = all_markov_moves(n);
    } else {
        std::istringstream is(moves_text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            auto m = parse_markov_move(tok);
            if (!m) throw CLI::ValidationError("--moves", "bad move spec '" + tok + "'");
            moves.push_back(*m);
        }
        if (moves.empty()) throw CLI::ValidationError("--moves", "no moves given");
    }
    InvariantReport before = invariants_of(link_group(kind, braid));
    bool all_equal = true;
    json jout = json::array();
    if (!as_json)
        std::cout << "before: " << before.str() << "\n";
    for (const auto& m : moves) {
        BraidWord moved = apply_markov(braid, m);
        InvariantReport after = invariants_of(link_group(kind, moved));
        bool eq = after == before;
        all_equal &= eq;
        if (as_json)
            jout.push_back(json{{"move", m.name()},
                                {"before", to_json(before)},
                                {"after", to_json(after)},
                                {"equal", eq}});
        else
            std::cout << m.name() << ": after " << after.str() << "  "
                      << (eq ? "equal" : "DIFFERS") << "\n";
    }
    if (as_json) std::cout << jout.dump(2) << "\n";
    return all_equal ? 0 : 1;
}

int cmd_kernel_demo(bool as_json) {
    const int n = 4;
    const std::string beta_text = "(s2^-1 r1 s2 r3)^3";
    BraidWord beta = parse_braid(beta_text, n);
    bool sw_id = is_identity(rep_image(RepKind::SW, n, beta));
    bool bd_id = is_identity(rep_image(RepKind::BD, n, beta));
    Endomorphism mt = rep_image(RepKind::MTilde, n, beta);
    bool mt_id = is_identity(mt);
    Symbol y1 = *mt.alphabet()->find("y1");
    std::string witness = print_word(mt.image(y1));
    bool ok = sw_id && bd_id && !mt_id;
    if (as_json) {
        std::cout << json{{"beta", beta_text},
                          {"sw_is_identity", sw_id},
                          {"bd_is_identity", bd_id},
                          {"mtilde_is_identity", mt_id},
                          {"witness_generator", "y1"},
                          {"witness_image", witness},
                          {"ok", ok}}.dump(2)
                  << "\n";
    } else {
        std::cout << "beta = " << beta_text << " on " << n << " strands\n";
        std::cout << "SW image:     " << (sw_id ? "identity (kernel element)" : "NOT identity") << "\n";
        std::cout << "BD image:     " << (bd_id ? "identity (kernel element)" : "NOT identity") << "\n";
        std::cout << "MTILDE image: " << (mt_id ? "identity" : "not identity") << "\n";
        std::cout << "witness: y1 -> " << witness << "\n";
        std::cout << (ok ? "OK" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual and welded braid representations, link groups, invariants"};
    app.require_subcommand(1);

    std::string rep = "M", word, gen, braid_text, diagram_file, pres_file, moves_text;
    int n = 2;
    bool as_json = false, ascii = false, layered = false, simplify = false, all_moves = false;

    auto* verify = app.add_subcommand("verify", "check the defining relations of a representation");
    verify->add_option("--rep", rep, "representation kind (A|SW|BD|M|MTILDE|PSI)")->required();
    verify->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 64));
    verify->add_flag("--json", as_json, "JSON output");

    auto* image = app.add_subcommand("image", "generator images of a braid word");
    image->add_option("--rep", rep)->required();
    image->add_option("--n", n)->required()->check(CLI::Range(2, 64));
    image->add_option("--word", word, "braid word")->required();
    image->add_option("--gen", gen, "print a single generator image");
    image->add_flag("--json", as_json);

    auto* group = app.add_subcommand("group", "link-group presentation from a braid or diagram");
    group->add_option("--rep", rep)->required();
    group->add_option("--braid", braid_text, "braid word source");
    group->add_option("--n", n, "strand count for --braid")->check(CLI::Range(2, 64));
    group->add_option("--diagram", diagram_file, "diagram JSON source");
    group->add_flag("--layered", layered, "layered construction (--rep M with --braid)");
    group->add_flag("--simplify", simplify, "apply Tietze simplification");
    group->add_flag("--json", as_json);
    group->add_flag("--ascii", ascii, "ASCII brackets in text output");

    auto* inv = app.add_subcommand("invariants", "abelianization and gamma2/gamma3 of a presentation");
    inv->add_option("--presentation", pres_file, "presentation JSON file")->required();
    inv->add_flag("--json", as_json);

    auto* markov = app.add_subcommand("markov", "invariance of link-group invariants under moves");
    markov->add_option("--rep", rep)->required();
    markov->add_option("--braid", braid_text)->required();
    markov->add_option("--n", n)->required()->check(CLI::Range(2, 64));
    markov->add_option("--moves", moves_text, "comma list: vc:k rc:k vs rs:+ rs:- rt:+ rt:- lt:+ lt:-");
    markov->add_flag("--all", all_moves, "run every applicable move");
    markov->add_flag("--json", as_json);

    auto* kernel = app.add_subcommand("kernel-demo", "kernel element separating the representations");
    kernel->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(rep, n, as_json);
        if (app.got_subcommand(image)) return cmd_image(rep, n, word, gen, as_json);
        if (app.got_subcommand(group)) {
            if (diagram_file.empty() && !group->count("--braid"))
                throw CLI::ValidationError("group", "give exactly one of --braid / --diagram");
            if (!diagram_file.empty() && group->count("--braid"))
                throw CLI::ValidationError("group", "give exactly one of --braid / --diagram");
            return cmd_group(rep, braid_text, n, diagram_file, layered, simplify, as_json, ascii);
        }
        if (app.got_subcommand(inv)) return cmd_invariants(pres_file, as_json);
        if (app.got_subcommand(markov)) {
            if (all_moves == !moves_text.empty())
                throw CLI::ValidationError("markov", "give exactly one of --moves / --all");
            return cmd_markov(rep, braid_text, n, moves_text, all_moves, as_json);
        }
        if (app.got_subcommand(kernel)) return cmd_kernel_demo(as_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const vbraid::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
