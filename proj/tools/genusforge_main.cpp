// genusforge command line: model checking, Lemma-style representation
// sweeps, and genus witness queries against intersection-lattice models.
//
// Exit codes: 0 success; 1 validation or usage error; 2 no witness /
// nothing found in range; 3 certification (ampleness) failure.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "genusforge/ampleness.hpp"
#include "genusforge/errors.hpp"
#include "genusforge/ints.hpp"
#include "genusforge/lattice.hpp"
#include "genusforge/model_io.hpp"
#include "genusforge/nodal.hpp"
#include "genusforge/planner.hpp"
#include "genusforge/quadform.hpp"
#include "genusforge/version.hpp"

using namespace genusforge;
using ojson = nlohmann::ordered_json;

namespace {

struct FormArgs {
    std::string a = "1", b = "2", c = "0";
    MixedQuadForm build() const {
        return MixedQuadForm(parse_int(a), parse_int(b), parse_int(c));
    }
};

void add_form_options(CLI::App* cmd, FormArgs& args) {
    cmd->add_option("--a", args.a, "coefficient of the first 9 squares")->required();
    cmd->add_option("--b", args.b, "coefficient of the last 9 squares")->required();
    cmd->add_option("--c", args.c, "uniform linear coefficient")->required();
}

LoadedModel load_checked_model(const std::string& path) {
    LoadedModel loaded = load_model_file(path);
    auto bad = validate_model(loaded.model);
    if (!bad.empty()) {
        std::string msg = "model '" + path + "' is invalid:";
        for (const auto& b : bad) msg += "\n  " + b;
        throw InvalidInput(msg);
    }
    return loaded;
}

std::string reider_line(const ReiderReport& rep) {
    std::string s = rep.passed ? "pass" : "fail";
    s += " (square " + rep.square_value.str();
    if (rep.worst_test)
        s += ", worst test " + rep.worst_test->first + " = " +
             rep.worst_test->second.str();
    s += ")";
    return s;
}

int cmd_check_model(const std::string& path, bool json) {
    LoadedModel loaded = load_model_file(path);
    auto violations = validate_model(loaded.model);
    if (json) {
        ojson j;
        j["tool_version"] = kToolVersion;
        j["model_hash"] = loaded.content_hash;
        j["valid"] = violations.empty();
        j["violations"] = violations;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& v : violations) std::cout << v << "\n";
        if (violations.empty())
            std::cout << "model OK: " << loaded.model.generators.size()
                      << " generators, hash " << loaded.content_hash << "\n";
    }
    return violations.empty() ? 0 : 1;
}

int cmd_represent(const FormArgs& fargs, const std::string& m_text, bool json) {
    const MixedQuadForm form = fargs.build();
    const Int m = parse_int(m_text);
    const Representation18 rep = represent_even(m, form);
    const Int value = evaluate(form, rep);
    if (json) {
        ojson j;
        j["type"] = "representation";
        j["tool_version"] = kToolVersion;
        j["form"] = ojson{{"a", form.a.str()}, {"b", form.b.str()}, {"c", form.c.str()}};
        j["m"] = m.str();
        j["pattern"] = to_string(rep.pattern);
        ojson xs = ojson::array();
        for (const Int& v : rep.x) xs.push_back(v.str());
        j["x"] = xs;
        j["evaluates_to"] = value.str();
        j["m0_bound"] = m0_bound(form).str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "f(x) = " << value.str() << "  pattern " << to_string(rep.pattern)
                  << "\nx =";
        for (const Int& v : rep.x) std::cout << " " << v.str();
        std::cout << "\nm0_bound(a,b) = " << m0_bound(form).str() << "\n";
    }
    return 0;
}

int cmd_witness(const std::string& path, const std::string& g_text,
                const std::string& m_min_text, bool json) {
    LoadedModel loaded = load_checked_model(path);
    const Int g = parse_int(g_text);
    const Int m_min = parse_int(m_min_text);
    const GenusWitness w = witness(loaded.model, g, m_min);
    if (json) {
        std::cout << genus_witness_record(w, loaded.content_hash);
    } else {
        std::cout << "genus " << w.g.str() << " realized by K + " << w.m.str()
                  << "H + sum x_i C_i\n"
                  << "e_used = " << w.e_used.str() << "\nx =";
        for (const Int& v : w.x) std::cout << " " << v.str();
        std::cout << "\nampleness: " << reider_line(w.reider) << "\n";
    }
    return 0;
}

int cmd_nodal(const std::string& path, const std::string& g_text,
              const std::string& m_min_text, bool json) {
    LoadedModel loaded = load_checked_model(path);
    const Int g = parse_int(g_text);
    const Int m_min = parse_int(m_min_text);
    const NodalWitness w = nodal_witness(loaded.model, g, m_min);
    if (json) {
        std::cout << nodal_witness_record(w, loaded.content_hash);
    } else {
        std::cout << "geometric genus " << w.g.str() << " as a " << w.r.str()
                  << "-nodal curve in |K + " << w.m.str() << "H|\n"
                  << "ampleness on blowup: " << reider_line(w.reider) << "\n";
    }
    return 0;
}

int cmd_sweep(const FormArgs& fargs, const std::string& from_text,
              const std::string& to_text, bool json) {
    const MixedQuadForm form = fargs.build();
    Int from = parse_int(from_text);
    const Int to = parse_int(to_text);
    if (from > to) throw InvalidInput("--from must not exceed --to");
    if (!is_even(from)) ++from;

    struct Row {
        Int m;
        bool ok;
        Int max_abs_x;
        std::string pattern;
    };
    std::vector<Row> rows;
    for (Int m = from; m <= to; m += 2) {
        Row row{m, false, 0, ""};
        try {
            const Representation18 rep = represent_even(m, form);
            row.ok = true;
            row.pattern = to_string(rep.pattern);
            for (const Int& v : rep.x) row.max_abs_x = std::max(row.max_abs_x, Int(abs(v)));
        } catch (const NoRepresentation&) {
        }
        rows.push_back(std::move(row));
    }

    const Int bound = m0_bound(form);
    std::optional<Int> m_star;
    if (to >= bound) m_star = m0_exact(form, to);

    if (json) {
        ojson j;
        j["type"] = "sweep";
        j["tool_version"] = kToolVersion;
        j["form"] = ojson{{"a", form.a.str()}, {"b", form.b.str()}, {"c", form.c.str()}};
        j["from"] = from.str();
        j["to"] = to.str();
        ojson arr = ojson::array();
        for (const auto& r : rows) {
            ojson e;
            e["m"] = r.m.str();
            e["ok"] = r.ok;
            if (r.ok) {
                e["max_abs_x"] = r.max_abs_x.str();
                e["pattern"] = r.pattern;
            }
            arr.push_back(e);
        }
        j["rows"] = arr;
        j["m0_bound"] = bound.str();
        j["empirical_m_star"] = m_star ? ojson(m_star->str()) : ojson(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "m\tok\tmax|x_i|\tpattern\n";
        for (const auto& r : rows) {
            std::cout << r.m.str() << "\t" << (r.ok ? "yes" : "no") << "\t";
            if (r.ok)
                std::cout << r.max_abs_x.str() << "\t" << r.pattern << "\n";
            else
                std::cout << "-\t-\n";
        }
        std::cout << "m0_bound = " << bound.str() << "\n";
        if (m_star)
            std::cout << "empirical m* = " << m_star->str() << " (every even m in [m*, "
                      << to.str() << "] representable)\n";
        else
            std::cout << "empirical m* not computed (--to below m0_bound)\n";
    }
    return 0;
}

int cmd_g0(const std::string& path, const std::string& span_text, bool json) {
    LoadedModel loaded = load_checked_model(path);
    const Int span = parse_int(span_text);
    const PlannerParams params = resolve_params(loaded.model, 0);
    const Int g0 = empirical_g0(loaded.model, span);
    if (json) {
        ojson j;
        j["type"] = "empirical-g0";
        j["tool_version"] = kToolVersion;
        j["model_hash"] = loaded.content_hash;
        j["empirical_g0"] = g0.str();
        j["scan_span"] = span.str();
        j["m_min"] = params.m_min.str();
        j["e"] = params.e.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "empirical g0 = " << g0.str() << " (span " << span.str()
                  << ", m_min " << params.m_min.str() << ", e " << params.e.str()
                  << "); empirical for the scanned span only\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic genus planning on intersection lattices"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    // check-model
    auto* check = app.add_subcommand("check-model", "validate a model file");
    std::string check_path;
    bool check_json = false;
    check->add_option("path", check_path, "model JSON file")->required();
    check->add_flag("--json", check_json, "machine-readable output");

    // represent
    auto* rep = app.add_subcommand("represent", "represent an even integer by the form");
    FormArgs rep_form;
    std::string rep_m;
    bool rep_json = false;
    add_form_options(rep, rep_form);
    rep->add_option("--m", rep_m, "even target")->required();
    rep->add_flag("--json", rep_json, "machine-readable output");

    // witness
    auto* wit = app.add_subcommand("witness", "smooth-curve genus witness");
    std::string wit_path, wit_g, wit_mmin = "0";
    bool wit_json = false;
    wit->add_option("--model", wit_path, "model JSON file")->required();
    wit->add_option("--genus", wit_g, "target genus")->required();
    wit->add_option("--m-min", wit_mmin, "lower bound for m (raised to the certified minimum)");
    wit->add_flag("--json", wit_json, "machine-readable output");

    // nodal
    auto* nod = app.add_subcommand("nodal", "nodal-curve geometric genus witness");
    std::string nod_path, nod_g, nod_mmin = "1";
    bool nod_json = false;
    nod->add_option("--model", nod_path, "model JSON file (K and H suffice)")->required();
    nod->add_option("--genus", nod_g, "target geometric genus")->required();
    nod->add_option("--m-min", nod_mmin, "lower bound for m");
    nod->add_flag("--json", nod_json, "machine-readable output");

    // sweep
    auto* swp = app.add_subcommand("sweep", "representation sweep over even targets");
    FormArgs swp_form;
    std::string swp_from, swp_to;
    bool swp_json = false;
    add_form_options(swp, swp_form);
    swp->add_option("--from", swp_from, "first target")->required();
    swp->add_option("--to", swp_to, "last target")->required();
    swp->add_flag("--json", swp_json, "machine-readable output");

    // g0
    auto* g0 = app.add_subcommand("g0", "empirical genus threshold for a model");
    std::string g0_path, g0_span = "100";
    bool g0_json = false;
    g0->add_option("--model", g0_path, "model JSON file")->required();
    g0->add_option("--span", g0_span, "length of the required gap-free run");
    g0->add_flag("--json", g0_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (check->parsed()) return cmd_check_model(check_path, check_json);
        if (rep->parsed()) return cmd_represent(rep_form, rep_m, rep_json);
        if (wit->parsed()) return cmd_witness(wit_path, wit_g, wit_mmin, wit_json);
        if (nod->parsed()) return cmd_nodal(nod_path, nod_g, nod_mmin, nod_json);
        if (swp->parsed()) return cmd_sweep(swp_form, swp_from, swp_to, swp_json);
        if (g0->parsed()) return cmd_g0(g0_path, g0_span, g0_json);
    } catch (const CertificationFailed& e) {
        std::cerr << "certification failed: " << e.what() << "\n";
        return 3;
    } catch (const NoRepresentation& e) {
        std::cerr << "no representation: " << e.what() << "\n";
        return 2;
    } catch (const NoWitness& e) {
        std::cerr << "no witness: " << e.what() << "\n";
        return 2;
    } catch (const OutOfRange& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return 2;
    } catch (const NotFound& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
