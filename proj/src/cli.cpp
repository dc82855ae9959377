#include "looprep/cli.hpp"

#include "looprep/classify.hpp"
#include "looprep/errors.hpp"
#include "looprep/levels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace looprep::cli {

using json = nlohmann::ordered_json;

namespace {

std::string structure_symbol(const CentralSubgroup& z, bool utf8) {
    const std::string zz = utf8 ? "ℤ" : "Z";
    if (z.size() == 1) return "1";
    if (z.is_cyclic()) return zz + "_" + std::to_string(z.size());
    return zz + "_2" + (utf8 ? "×" : "x") + zz + "_2";
}

std::string element_name(const CentralSubgroup& z, std::size_t idx) {
    if (idx == 0) return "1";
    if (!z.is_cyclic()) return std::string(1, "1vsc"[idx]);
    return idx == 1 ? "g" : "g" + std::to_string(idx);
}

CentralElement resolve_element(const RootSystem& rs, const CentralSubgroup& z,
                               const std::string& text) {
    std::string s;
    for (char c : text) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "id" || s == "0") return z.elements[0];
    if (s == "v" || s == "s" || s == "c") {
        if (rs.type.family == Family::D && rs.type.rank % 2 == 0) {
            int want = s == "v" ? 1 : (s == "s" ? rs.type.rank - 1 : rs.type.rank);
            for (const auto& e : z.elements)
                if (e.special_index == want) return e;
        }
        throw UsageError("element '" + text + "' is not in subgroup " + z.name);
    }
    bool digits = !s.empty();
    for (char c : s) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (digits) {
        if (z.size() == 1) return z.elements[0];
        if (!z.is_cyclic()) {
            if (s == "1") return z.elements[0]; // Klein identity goes by "1"
            throw UsageError("subgroup " + z.name + " is not cyclic; use v, s, c or id");
        }
        // power of the subgroup generator, so that "1" is the generator itself
        return z.elements[z.power(1, std::stoll(s))];
    }
    throw UsageError("cannot parse element '" + text + "' (use a generator power, v/s/c, or id)");
}

IVec parse_labels(const std::string& text, std::size_t rank) {
    IVec labels;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            labels.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw UsageError("bad weight component '" + tok + "'");
        }
    }
    if (labels.size() != rank)
        throw UsageError("expected " + std::to_string(rank) + " comma-separated labels");
    return labels;
}

std::string labels_text(const IVec& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i)
        s += (i ? "," : "") + std::to_string(labels[i]);
    return s;
}

json labels_json(const IVec& labels) {
    json a = json::array();
    for (long long v : labels) a.push_back(v);
    return a;
}

IVec weight_labels(const RootSystem& rs, const Vec& weight) {
    IVec out;
    for (const Rat& c : to_dynkin_labels(rs, weight)) out.push_back(to_integer(c));
    return out;
}

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], display_width(r[i]));
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size())
                line += std::string(width[i] - display_width(r[i]) + 2, ' ');
        }
        out << line << '\n';
    }
}

std::string omega_name(std::size_t index) { return "omega" + std::to_string(index); }

std::string center_form_text(const RootSystem& rs, const CommutatorMap& omega) {
    auto cf = pulled_back_center_form(rs, omega);
    if (!cf) return "n/a";
    return cf->nontrivial ? "nontrivial" : "trivial";
}

json form_json(const RootSystem& rs, const CommutatorMap& f, std::size_t index) {
    json jf;
    jf["name"] = omega_name(index);
    jf["center_form"] = center_form_text(rs, f);
    json section = json::array();
    for (std::size_t i = 0; i < f.subgroup.size(); ++i) {
        json row;
        row["element"] = element_name(f.subgroup, i);
        row["labels"] = labels_json(weight_labels(rs, f.section[i]));
        section.push_back(row);
    }
    jf["section"] = section;
    json table = json::array();
    for (const auto& row : f.table) {
        json jrow = json::array();
        for (const Rat& q : row) jrow.push_back(json::array({num(q), den(q)}));
        table.push_back(jrow);
    }
    jf["table"] = table;
    return jf;
}

json orbit_json(const Orbit& orb) {
    json members = json::array();
    for (const auto& w : orb.members) members.push_back(labels_json(w.labels));
    return members;
}

json class_json(const RootSystem& rs, const PERClass& c) {
    json jc;
    jc["omega"] = omega_name(c.omega_index);
    jc["center_form"] = center_form_text(rs, c.omega);
    jc["orbit"] = orbit_json(c.orbit);
    jc["stabilizer"] = c.orbit.stabilizer.name;
    jc["multiplicity"] = c.multiplicity;
    jc["factors_through_quotient"] = c.factors_through_quotient;
    if (c.characters.size() == 1) {
        jc["characters"] = json::array({"singleton"});
    } else {
        json chars = json::array();
        for (const auto& cl : c.characters) chars.push_back(labels_json(cl));
        jc["characters"] = chars;
    }
    return jc;
}

json classify_json(const RootSystem& rs, const CentralSubgroup& z, long long level,
                   const std::vector<PERClass>& classes) {
    json j;
    j["schema"] = 1;
    j["group"] = rs.name();
    j["subgroup"] = z.name;
    j["level"] = level;
    j["fundamental_level"] = fundamental_level(rs, z);
    j["basic_level"] = basic_level(rs, z);
    json arr = json::array();
    for (const auto& c : classes) arr.push_back(class_json(rs, c));
    j["classes"] = arr;
    return j;
}

void classify_table(std::ostream& out, const RootSystem& rs,
                    const std::vector<PERClass>& classes) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"omega", "center", "orbit", "stabilizer", "mult", "factors"});
    for (const auto& c : classes) {
        std::string orbit_text;
        for (const auto& w : c.orbit.members)
            orbit_text += (orbit_text.empty() ? "" : " ") + labels_text(w.labels);
        rows.push_back({omega_name(c.omega_index), center_form_text(rs, c.omega), orbit_text,
                        c.orbit.stabilizer.name, std::to_string(c.multiplicity),
                        c.factors_through_quotient ? "yes" : "no"});
    }
    print_aligned(out, rows);
}

std::vector<std::string> level_row_text(const LevelRecord& r) {
    RootSystem rs = build(r.group);
    const CentralSubgroup z = find_subgroup(subgroups(rs), r.subgroup);
    std::string zcol = structure_symbol(z, true);
    if (r.subgroup != "full") zcol += " (" + r.subgroup + ")";
    return {classical_alias(r.group), zcol, r.quotient.empty() ? "—" : r.quotient,
            std::to_string(r.fundamental), std::to_string(r.basic)};
}

json level_row_json(const LevelRecord& r) {
    json j;
    j["group"] = type_name(r.group);
    j["subgroup"] = r.subgroup;
    j["quotient"] = r.quotient;
    j["fundamental_level"] = r.fundamental;
    j["basic_level"] = r.basic;
    return j;
}

struct Options {
    std::string group;
    std::string subgroup = "full";
    long long level = 0;
    std::string format = "table";
    std::string weight;
    std::string element;
    int max_rank = 6;
    long long max_level = 3;
    std::string out_dir;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int dispatch(const std::string& verb, const Options& opt, std::ostream& out) {
    const bool as_json = opt.format == "json";

    if (verb == "emit-golden") {
        emit_golden(opt.max_rank, opt.max_level, opt.out_dir);
        out << "wrote golden fixtures to " << opt.out_dir << '\n';
        return 0;
    }

    if (verb == "levels" && opt.group.empty()) {
        auto rows = levels_table(opt.max_rank);
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["rows"] = json::array();
            for (const auto& r : rows) j["rows"].push_back(level_row_json(r));
            emit(out, j);
        } else {
            std::vector<std::vector<std::string>> t;
            t.push_back({"G", "Z", "G/Z", "lf", "lb"});
            for (const auto& r : rows) t.push_back(level_row_text(r));
            print_aligned(out, t);
        }
        return 0;
    }

    RootSystem rs = build(parse_group_name(opt.group));
    auto subs = subgroups(rs);

    if (verb == "levels") {
        const CentralSubgroup& z = find_subgroup(subs, opt.subgroup);
        LevelRecord r{rs.type, z.name, quotient_name(rs, z), fundamental_level(rs, z),
                      basic_level(rs, z)};
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["rows"] = json::array({level_row_json(r)});
            emit(out, j);
        } else {
            print_aligned(out, {level_row_text(r)});
        }
        return 0;
    }
    if (verb == "diagram") {
        ExtendedDiagram dia = extended_diagram(rs);
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["group"] = rs.name();
            j["marks"] = labels_json(rs.marks);
            j["comarks"] = labels_json(rs.comarks);
            json edges = json::array();
            for (std::size_t i = 0; i < dia.node_count(); ++i)
                for (std::size_t j2 = i + 1; j2 < dia.node_count(); ++j2) {
                    if (dia.bond(i, j2) == 0) continue;
                    json e;
                    e["nodes"] = json::array({i, j2});
                    e["bond"] = dia.bond(i, j2);
                    if (dia.node_len2[i] != dia.node_len2[j2])
                        e["arrow_to"] = dia.node_len2[i] < dia.node_len2[j2] ? i : j2;
                    edges.push_back(e);
                }
            j["edges"] = edges;
            emit(out, j);
        } else {
            out << "extended Dynkin diagram of " << rs.name() << " (node 0 = -theta)\n";
            for (std::size_t i = 0; i < dia.node_count(); ++i)
                for (std::size_t j2 = i + 1; j2 < dia.node_count(); ++j2) {
                    long long b = dia.bond(i, j2);
                    if (b == 0) continue;
                    std::string arrow = "--";
                    if (dia.node_len2[i] > dia.node_len2[j2]) arrow = "=>";
                    if (dia.node_len2[i] < dia.node_len2[j2]) arrow = "<=";
                    out << "  " << i << " " << arrow << " " << j2 << "  bond " << b << '\n';
                }
            out << "marks:   " << labels_text(rs.marks) << '\n';
            out << "comarks: " << labels_text(rs.comarks) << '\n';
        }
        return 0;
    }

    if (verb == "alcove") {
        auto weights = alcove(rs, opt.level);
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["group"] = rs.name();
            j["level"] = opt.level;
            j["weights"] = json::array();
            for (const auto& w : weights) j["weights"].push_back(labels_json(w.labels));
            emit(out, j);
        } else {
            for (const auto& w : weights) out << labels_text(w.labels) << '\n';
        }
        return 0;
    }

    const CentralSubgroup& z = find_subgroup(subs, opt.subgroup);

    if (verb == "act") {
        CentralElement e = resolve_element(rs, z, opt.element);
        AlcoveWeight w{parse_labels(opt.weight, rs.rank()), opt.level};
        AlcoveWeight img = act(rs, e, opt.level, w);
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["group"] = rs.name();
            j["subgroup"] = z.name;
            j["level"] = opt.level;
            j["element"] = element_name(z, [&] {
                for (std::size_t i = 0; i < z.size(); ++i)
                    if (z.elements[i] == e) return i;
                return std::size_t{0};
            }());
            j["weight"] = labels_json(w.labels);
            j["image"] = labels_json(img.labels);
            emit(out, j);
        } else {
            out << labels_text(img.labels) << '\n';
        }
        return 0;
    }

    if (verb == "orbits") {
        auto orbs = orbits(rs, z, opt.level);
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["group"] = rs.name();
            j["subgroup"] = z.name;
            j["level"] = opt.level;
            j["orbits"] = json::array();
            for (const auto& orb : orbs) {
                json jo;
                jo["members"] = orbit_json(orb);
                jo["stabilizer"] = orb.stabilizer.name;
                j["orbits"].push_back(jo);
            }
            emit(out, j);
        } else {
            std::vector<std::vector<std::string>> t;
            t.push_back({"orbit", "size", "stabilizer"});
            for (const auto& orb : orbs) {
                std::string members;
                for (const auto& w : orb.members)
                    members += (members.empty() ? "" : " ") + labels_text(w.labels);
                t.push_back({members, std::to_string(orb.members.size()), orb.stabilizer.name});
            }
            print_aligned(out, t);
        }
        return 0;
    }

    if (verb == "forms") {
        auto fs = enumerate_admissible(rs, z, opt.level);
        if (as_json) {
            json j;
            j["schema"] = 1;
            j["group"] = rs.name();
            j["subgroup"] = z.name;
            j["level"] = opt.level;
            j["forms"] = json::array();
            for (std::size_t i = 0; i < fs.size(); ++i) j["forms"].push_back(form_json(rs, fs[i], i));
            emit(out, j);
        } else {
            if (fs.empty()) out << "no admissible commutator map at level " << opt.level << '\n';
            for (std::size_t i = 0; i < fs.size(); ++i) {
                out << omega_name(i) << "  center_form=" << center_form_text(rs, fs[i]) << '\n';
                for (const auto& row : fs[i].table) {
                    std::string line = "  ";
                    for (const Rat& q : row) line += to_string(q) + " ";
                    out << line << '\n';
                }
            }
        }
        return 0;
    }

    if (verb == "classify" || verb == "classify-quotient") {
        auto classes = verb == "classify" ? classify_lzg(rs, z, opt.level)
                                          : classify_quotient(rs, z, opt.level);
        if (as_json) {
            json j = classify_json(rs, z, opt.level, classes);
            if (verb == "classify-quotient")
                j["quotient_extension_count"] = extension_count_quotient(rs, z, opt.level);
            emit(out, j);
        } else {
            classify_table(out, rs, classes);
            if (verb == "classify-quotient")
                out << "central extensions of the quotient at this level: "
                    << extension_count_quotient(rs, z, opt.level) << '\n';
        }
        return 0;
    }

    throw UsageError("unknown command '" + verb + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification data for positive-energy representations of loop groups"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_subgroup, bool with_level) {
        sub->add_option("--group", opt.group, "group name, e.g. D4 or Spin8")->required();
        if (with_subgroup)
            sub->add_option("--subgroup", opt.subgroup, "central subgroup name")->required();
        if (with_level)
            sub->add_option("--level", opt.level, "level")->check(CLI::NonNegativeNumber)->required();
        sub->add_option("--format", opt.format, "table or json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* levels = app.add_subcommand("levels", "fundamental and basic levels");
    levels->add_option("--group", opt.group, "group name");
    levels->add_option("--subgroup", opt.subgroup, "central subgroup name");
    levels->add_option("--max-rank", opt.max_rank, "table cutoff when no group is given")
        ->check(CLI::Range(2, 16));
    levels->add_option("--format", opt.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    add_common(app.add_subcommand("alcove", "level ell alcove weights"), false, true);
    CLI::App* act_cmd = app.add_subcommand("act", "alcove action of a central element");
    add_common(act_cmd, true, true);
    act_cmd->add_option("--weight", opt.weight, "comma-separated Dynkin labels")->required();
    act_cmd->add_option("--element", opt.element, "generator power, v/s/c, or id")->required();
    add_common(app.add_subcommand("orbits", "orbits of Z on the alcove"), true, true);
    add_common(app.add_subcommand("forms", "admissible commutator maps"), true, true);
    add_common(app.add_subcommand("classify", "positive-energy classes of L_Z G"), true, true);
    add_common(app.add_subcommand("classify-quotient", "classes factoring through L(G/Z)"),
               true, true);
    add_common(app.add_subcommand("diagram", "extended Dynkin diagram"), false, false);

    CLI::App* golden = app.add_subcommand("emit-golden", "write golden fixtures");
    golden->add_option("--max-rank", opt.max_rank)->check(CLI::Range(2, 16));
    golden->add_option("--max-level", opt.max_level)->check(CLI::NonNegativeNumber);
    golden->add_option("--out", opt.out_dir, "output directory")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

void emit_golden(int max_rank, long long max_level, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    {
        std::ofstream f(fs::path(out_dir) / "levels_table.txt", std::ios::binary);
        std::vector<std::vector<std::string>> t;
        t.push_back({"G", "Z", "G/Z", "lf", "lb"});
        for (const auto& r : levels_table(max_rank)) t.push_back(level_row_text(r));
        std::ostringstream ss;
        print_aligned(ss, t);
        f << ss.str();
    }

    std::vector<SimpleType> types;
    for (int n = 1; n <= max_rank; ++n) types.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) types.push_back({Family::B, n});
    for (int n = 1; n <= max_rank; ++n) types.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) types.push_back({Family::D, n});
    for (int n = 6; n <= 8; ++n)
        if (n <= max_rank) types.push_back({Family::E, n});

    json counts = json::array();
    json orbit_parts = json::array();
    for (const auto& t : types) {
        RootSystem rs = build(t);
        for (const auto& z : subgroups(rs)) {
            for (long long l = 0; l <= max_level; ++l) {
                auto classes = classify_lzg(rs, z, l);
                long long mult2 = 0;
                for (const auto& c : classes) mult2 += c.multiplicity == 2 ? 1 : 0;
                json row;
                row["group"] = rs.name();
                row["subgroup"] = z.name;
                row["level"] = l;
                row["forms"] = enumerate_admissible(rs, z, l).size();
                row["orbits"] = orbits(rs, z, l).size();
                row["classes"] = classes.size();
                row["multiplicity_two_classes"] = mult2;
                counts.push_back(row);

                json part;
                part["group"] = rs.name();
                part["subgroup"] = z.name;
                part["level"] = l;
                part["orbits"] = json::array();
                for (const auto& orb : orbits(rs, z, l)) {
                    json jo;
                    jo["members"] = orbit_json(orb);
                    jo["stabilizer"] = orb.stabilizer.name;
                    part["orbits"].push_back(jo);
                }
                orbit_parts.push_back(part);
            }
        }
    }
    {
        std::ofstream f(fs::path(out_dir) / "classify_counts.json", std::ios::binary);
        f << counts.dump(2) << '\n';
    }
    {
        std::ofstream f(fs::path(out_dir) / "orbit_partitions.json", std::ios::binary);
        f << orbit_parts.dump(2) << '\n';
    }
}

} // namespace looprep::cli
