#include "hst/error.hpp"
#include "hst/geometry.hpp"
#include "hst/json_io.hpp"
#include "hst/orders.hpp"
#include "hst/vertex_ops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

using nlohmann::json;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) std::cout << text;
    else hst::write_text_file(out_path, text);
}

int run(int argc, char** argv) {
    CLI::App app{"Triangulations of cyclic polytopes and the higher Stasheff-Tamari orders"};
    app.require_subcommand(1);
    app.fallthrough(); // let subcommands pick up the global --budget

    std::size_t budget = 1000000;
    app.add_option("--budget", budget, "node budget for enumeration")->capture_default_str();

    int m = 0, n = 0;
    std::string out_path, format = "json", from_path, to_path, file_path, lowerset_path;
    bool count_only = false, all_expansions = false;
    hst::Label x = 0, y = 0, v = 0;

    auto* cmd_enum = app.add_subcommand("enumerate", "list all triangulations of C(m, n)");
    cmd_enum->add_option("m", m)->required();
    cmd_enum->add_option("n", n)->required();
    cmd_enum->add_flag("--count", count_only, "print only the number of triangulations");
    cmd_enum->add_option("-o,--output", out_path);

    auto* cmd_poset = app.add_subcommand("poset", "export the flip poset of C(m, n)");
    cmd_poset->add_option("m", m)->required();
    cmd_poset->add_option("n", n)->required();
    cmd_poset->add_option("--format", format, "dot or json")->capture_default_str();
    cmd_poset->add_option("-o,--output", out_path);

    auto* cmd_check = app.add_subcommand("check-equality",
                                         "verify that the two orders coincide on C(m, n)");
    cmd_check->add_option("m", m)->required();
    cmd_check->add_option("n", n)->required();

    auto* cmd_chain = app.add_subcommand("flip-chain",
                                         "increasing flips connecting two triangulations");
    cmd_chain->add_option("--from", from_path)->required();
    cmd_chain->add_option("--to", to_path)->required();
    cmd_chain->add_option("-o,--output", out_path);

    auto* cmd_contract = app.add_subcommand("contract", "merge two adjacent vertices");
    cmd_contract->add_option("file", file_path)->required();
    cmd_contract->add_option("--x", x)->required();
    cmd_contract->add_option("--y", y)->required();
    cmd_contract->add_option("-o,--output", out_path);

    auto* cmd_delete = app.add_subcommand("delete", "vertex figure triangulation at v");
    cmd_delete->add_option("file", file_path)->required();
    cmd_delete->add_option("--v", v)->required();
    cmd_delete->add_option("-o,--output", out_path);

    auto* cmd_expand = app.add_subcommand("expand", "expansions of a triangulation at v");
    cmd_expand->add_option("file", file_path)->required();
    cmd_expand->add_option("--v", v)->required();
    cmd_expand->add_flag("--all", all_expansions, "emit every expansion at v");
    cmd_expand->add_option("--lowerset", lowerset_path,
                           "JSON file {\"members\": [[...], ...]} selecting one expansion");
    cmd_expand->add_option("-o,--output", out_path);

    auto* cmd_sections = app.add_subcommand("sections", "sections of the vertex figure at v");
    cmd_sections->add_option("file", file_path)->required();
    cmd_sections->add_option("--v", v)->required();
    cmd_sections->add_option("-o,--output", out_path);

    auto* cmd_certify = app.add_subcommand("certify", "validity and volume certification");
    cmd_certify->add_option("file", file_path)->required();
    cmd_certify->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // bad usage is a malformed request
    }

    if (cmd_enum->parsed()) {
        auto p = hst::enumerate_poset(m, n, budget);
        if (count_only) {
            emit(out_path, std::to_string(p.nodes.size()) + "\n");
            return 0;
        }
        json j = json::array();
        for (const auto& t : p.nodes) j.push_back(hst::triangulation_to_json(t));
        emit(out_path, hst::dump_canonical(j));
        return 0;
    }

    if (cmd_poset->parsed()) {
        auto p = hst::enumerate_poset(m, n, budget);
        if (format == "dot") {
            emit(out_path, hst::export_dot(p));
            return 0;
        }
        if (format != "json") throw hst::UnknownFormat("poset: format must be dot or json");
        json j = hst::poset_to_json(p);
        // Order spot checks: the bottom lies below and the top above every
        // node in the second order.
        bool bottom_ok = true, top_ok = true;
        for (const auto& t : p.nodes) {
            bottom_ok = bottom_ok && hst::leq2(p.nodes.front(), t);
            top_ok = top_ok && hst::leq2(t, hst::upper_triangulation(p.vertex_set, p.n));
        }
        j["leq2_spot_checks"] = {{"bottom_below_all", bottom_ok}, {"all_below_top", top_ok}};
        emit(out_path, hst::dump_canonical(j));
        return 0;
    }

    if (cmd_check->parsed()) {
        auto rep = hst::verify_equivalence(m, n, budget);
        std::cout << "triangulations: " << rep.node_count << "\n"
                  << "ordered pairs:  " << rep.pair_count << "\n"
                  << "violations:     " << rep.violations << "\n";
        return rep.ok() ? 0 : 2;
    }

    if (cmd_chain->parsed()) {
        auto t_from = hst::read_triangulation_file(from_path);
        auto t_to = hst::read_triangulation_file(to_path);
        if (!hst::leq2(t_from, t_to)) {
            std::cerr << "not comparable: the source is not below the target\n";
            return 2;
        }
        auto chain = hst::flip_chain(t_from, t_to);
        emit(out_path, hst::dump_canonical(hst::flip_chain_to_json(chain)));
        return 0;
    }

    if (cmd_contract->parsed()) {
        auto t = hst::read_triangulation_file(file_path);
        auto [res, map] = hst::contract_pair(t, x, y);
        json j;
        j["schema"] = hst::kSchema;
        j["triangulation"] = hst::triangulation_to_json(res);
        j["relabel"] = hst::relabel_map_to_json(map);
        emit(out_path, hst::dump_canonical(j));
        return 0;
    }

    if (cmd_delete->parsed()) {
        auto t = hst::read_triangulation_file(file_path);
        auto fig = hst::delete_vertex(t, v);
        json j;
        j["schema"] = hst::kSchema;
        j["apex"] = fig.apex;
        j["simplices"] = fig.simplices;
        j["lower_facets"] = fig.lower_facets;
        j["upper_facets"] = fig.upper_facets;
        j["relabel"] = hst::relabel_map_to_json({});
        emit(out_path, hst::dump_canonical(j));
        return 0;
    }

    if (cmd_expand->parsed()) {
        auto t = hst::read_triangulation_file(file_path);
        json j;
        j["schema"] = hst::kSchema;
        if (!lowerset_path.empty()) {
            auto fig = hst::delete_vertex(t, v);
            std::ifstream in(lowerset_path);
            if (!in) throw hst::UnknownFormat("cannot open file: " + lowerset_path);
            json lj;
            in >> lj;
            hst::SectionLowerSet sls;
            sls.members = lj.at("members").get<std::vector<hst::Simplex>>();
            sls.section = hst::section_of(fig, sls.members);
            auto [res, map] = hst::expand(t, v, sls);
            j["triangulation"] = hst::triangulation_to_json(res);
            j["relabel"] = hst::relabel_map_to_json(map);
        } else {
            auto all = hst::expansions(t, v, budget);
            json arr = json::array();
            for (const auto& e : all) arr.push_back(hst::triangulation_to_json(e));
            j["expansions"] = std::move(arr);
            hst::RelabelMap map;
            for (hst::Label w = v + 1; w <= t.vertex_set().back(); ++w)
                map.emplace_back(w, w + 1);
            j["relabel"] = hst::relabel_map_to_json(map);
        }
        emit(out_path, hst::dump_canonical(j));
        return 0;
    }

    if (cmd_sections->parsed()) {
        auto t = hst::read_triangulation_file(file_path);
        auto fig = hst::delete_vertex(t, v);
        json arr = json::array();
        for (const auto& sls : hst::lower_sets(fig)) {
            json e;
            e["members"] = sls.members;
            e["section"] = sls.section;
            arr.push_back(std::move(e));
        }
        json j;
        j["schema"] = hst::kSchema;
        j["apex"] = v;
        j["sections"] = std::move(arr);
        emit(out_path, hst::dump_canonical(j));
        return 0;
    }

    if (cmd_certify->parsed()) {
        auto t = hst::read_triangulation_file(file_path);
        hst::ValidationWitness w;
        bool valid = hst::validate(t, &w);
        bool volume_ok = hst::volume_certify(t);
        hst::Rational sum = 0;
        for (const auto& s : t.simplices()) sum += hst::simplex_volume_scaled(s);
        json j;
        j["schema"] = hst::kSchema;
        j["valid"] = valid;
        j["volume_certified"] = volume_ok;
        j["scaled_volume_sum"] = sum.str();
        if (!valid) j["witness"] = w.describe();
        emit(out_path, hst::dump_canonical(j));
        return (valid && volume_ok) ? 0 : 2;
    }

    return 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hst::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hst::TheoremViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
