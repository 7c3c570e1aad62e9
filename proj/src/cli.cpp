#include "tabstat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tabstat/verify.hpp"

namespace tabstat {

namespace {

struct InputOpts {
    std::string file;
    std::string inline_filling;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--file", in.file, "filling file (text or structured)");
    cmd->add_option("--filling", in.inline_filling, "inline filling, rows top first, '/'-separated");
}

Filling load_filling(const InputOpts& in) {
    if (!in.file.empty() && !in.inline_filling.empty())
        throw DomainError("give either --file or --filling, not both");
    if (!in.file.empty()) {
        std::ifstream stream(in.file);
        if (!stream) throw ParseError("cannot open '" + in.file + "'");
        std::stringstream buf;
        buf << stream.rdbuf();
        std::string text = buf.str();
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') return filling_from_json_text(text);
        return parse_filling(text);
    }
    if (!in.inline_filling.empty()) return parse_filling_line(in.inline_filling);
    throw DomainError("an input filling is required (--file or --filling)");
}

Partition parse_shape(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad shape '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

nlohmann::json filling_json(const Filling& f) {
    return nlohmann::json::parse(filling_to_json_text(f));
}

std::string ndes_str(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

StatVar parse_stat_var(const std::string& s, const std::string& flag) {
    if (s == "t") return StatVar::T;
    if (s == "u") return StatVar::U;
    if (s == "none") return StatVar::None;
    throw DomainError("bad value for " + flag + ": '" + s + "'");
}

struct CliState {
    std::ostream& out;
    std::ostream& err;
    int exit_code = 0;
};

void print_trace_or_result(CliState& st, const Trace& trace, const Filling& result, bool with_trace,
                           bool json, bool bottom_up) {
    if (json) {
        nlohmann::json doc;
        doc["result"] = filling_json(result);
        if (with_trace) doc["trace"] = nlohmann::json::parse(trace_to_json_text(trace));
        st.out << doc.dump() << "\n";
        return;
    }
    if (with_trace) st.out << trace_to_text(trace);
    st.out << serialize_filling(result, bottom_up);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"statistics, operators and bijections on fillings of Young diagrams"};
    app.require_subcommand(1);

    CliState st{out, err};
    std::string format_name = "text";
    bool json_flag = false;
    bool json = false;
    bool bottom_up = false;
    bool with_trace = false;
    auto resolve_format = [&]() {
        if (json_flag) format_name = "json";
        if (format_name == "json" || format_name == "structured")
            json = true;
        else if (format_name != "text")
            throw DomainError("bad value for --format: '" + format_name + "'");
    };

    // ---- stats -------------------------------------------------------------
    InputOpts stats_in;
    auto* stats_cmd = app.add_subcommand("stats", "print maj/inv/quinv/des/ndes of a filling");
    add_input_options(stats_cmd, stats_in);
    stats_cmd->add_option("--format", format_name, "output format: text | json");
    stats_cmd->add_flag("--json", json_flag, "shorthand for --format json");
    stats_cmd->callback([&]() {
        resolve_format();
        Filling f = load_filling(stats_in);
        StatBundle s = stat_bundle(f);
        if (json) {
            nlohmann::json doc;
            doc["maj"] = s.maj;
            doc["inv"] = s.inv;
            doc["quinv"] = s.quinv;
            doc["des"] = s.des;
            doc["ndes"] = s.ndes;
            st.out << doc.dump() << "\n";
        } else {
            st.out << "maj=" << s.maj << " inv=" << s.inv << " quinv=" << s.quinv << "\n";
            st.out << "des=" << s.des << "\n";
            st.out << "ndes=" << ndes_str(s.ndes) << "\n";
        }
    });

    // ---- apply -------------------------------------------------------------
    InputOpts apply_in;
    std::string op;
    int col = 0, row = 0, from = 0, to = 0;
    auto* apply_cmd = app.add_subcommand("apply", "apply an operator (t, rho, phi) to a filling");
    add_input_options(apply_cmd, apply_in);
    apply_cmd->add_option("--op", op, "operator: t | rho | phi")->required();
    apply_cmd->add_option("--col", col, "column i (acts on columns i, i+1)")->required();
    apply_cmd->add_option("--row", row, "row for t/rho (default: top of the column)");
    apply_cmd->add_option("--from", from, "first row for a range swap t_i^[r,s]");
    apply_cmd->add_option("--to", to, "last row for a range swap t_i^[r,s]");
    apply_cmd->add_flag("--trace", with_trace, "print every step");
    apply_cmd->add_option("--format", format_name, "output format: text | json");
    apply_cmd->add_flag("--json", json_flag, "shorthand for --format json");
    apply_cmd->add_flag("--bottom-up", bottom_up, "print the bottom row first");
    apply_cmd->callback([&]() {
        resolve_format();
        Filling f = load_filling(apply_in);
        int top = f.shape().col_height(col);
        Trace trace;
        trace.input = f;
        if (op == "t" && (from || to)) {
            detail::require(from >= 1 && to >= from, "apply: bad --from/--to range");
            Filling g = range_swap(f, col, from, to);
            trace.steps.push_back({"t-range", col, from, to, {}, g});
            trace.output = g;
            print_trace_or_result(st, trace, g, with_trace, json, bottom_up);
        } else if (op == "t") {
            int r = row ? row : top;
            Filling g = row_swap(f, col, r);
            trace.steps.push_back({"t", col, r, 0, {}, g});
            trace.output = g;
            print_trace_or_result(st, trace, g, with_trace, json, bottom_up);
        } else if (op == "rho") {
            int r = row ? row : top;
            FlipResult fr = rho(f, col, r);
            trace.steps.push_back({"rho", col, fr.end_row, fr.start_row, {}, fr.filling});
            trace.output = fr.filling;
            if (json) {
                nlohmann::json doc;
                doc["identity"] = fr.identity;
                doc["no_start_row"] = fr.no_start_row;
                doc["start_row"] = fr.start_row;
                doc["end_row"] = fr.end_row;
                doc["result"] = filling_json(fr.filling);
                if (with_trace) doc["trace"] = nlohmann::json::parse(trace_to_json_text(trace));
                st.out << doc.dump() << "\n";
            } else {
                if (fr.identity)
                    st.out << "identity" << (fr.no_start_row ? " (no starting row)" : "") << "\n";
                else
                    st.out << "start_row=" << fr.start_row << " end_row=" << fr.end_row << "\n";
                if (with_trace) st.out << trace_to_text(trace);
                st.out << serialize_filling(fr.filling, bottom_up);
            }
        } else if (op == "phi") {
            Filling g = phi(f, col);
            trace.steps.push_back({"phi", col, 0, 0, {}, g});
            trace.output = g;
            print_trace_or_result(st, trace, g, with_trace, json, bottom_up);
        } else {
            throw DomainError("unknown operator '" + op + "'");
        }
    });

    // ---- bijections ----------------------------------------------------------
    InputOpts bij_in;
    for (const std::string name : {"gamma", "theta", "varphi"}) {
        auto* cmd = app.add_subcommand(name, "apply the bijection " + name);
        add_input_options(cmd, bij_in);
        cmd->add_flag("--trace", with_trace, "print every step");
        cmd->add_option("--format", format_name, "output format: text | json");
        cmd->add_flag("--json", json_flag, "shorthand for --format json");
        cmd->add_flag("--bottom-up", bottom_up, "print the bottom row first");
        cmd->callback([&, name]() {
            resolve_format();
        Filling f = load_filling(bij_in);
            Trace trace;
            Filling g = name == "gamma"   ? gamma(f, &trace)
                        : name == "theta" ? theta(f, &trace)
                                          : varphi(f, &trace);
            print_trace_or_result(st, trace, g, with_trace, json, bottom_up);
        });
    }

    // ---- class-poly -----------------------------------------------------------
    InputOpts poly_in;
    std::string maj_var = "q", inv_var = "t", quinv_var = "u";
    std::int64_t budget = 1000000;
    auto* poly_cmd = app.add_subcommand("class-poly", "generating polynomial of a row class");
    add_input_options(poly_cmd, poly_in);
    poly_cmd->add_option("--maj", maj_var, "variable for maj: q | none");
    poly_cmd->add_option("--inv", inv_var, "variable for inv: t | u | none");
    poly_cmd->add_option("--quinv", quinv_var, "variable for quinv: t | u | none");
    poly_cmd->add_option("--budget", budget, "largest class size to enumerate");
    poly_cmd->add_option("--format", format_name, "output format: text | json");
    poly_cmd->add_flag("--json", json_flag, "shorthand for --format json");
    poly_cmd->callback([&]() {
        resolve_format();
        Filling f = load_filling(poly_in);
        ClassPolyWeights w;
        if (maj_var == "q")
            w.maj_to_q = true;
        else if (maj_var == "none")
            w.maj_to_q = false;
        else
            throw DomainError("bad value for --maj: '" + maj_var + "'");
        w.inv = parse_stat_var(inv_var, "--inv");
        w.quinv = parse_stat_var(quinv_var, "--quinv");
        GenPoly p = class_poly(f, w, budget);
        if (json) {
            nlohmann::json doc;
            doc["poly"] = p.str();
            st.out << doc.dump() << "\n";
        } else {
            st.out << p.str() << "\n";
        }
    });

    // ---- macdonald -------------------------------------------------------------
    std::string shape_text;
    int vars = 3;
    std::string stat_name = "inv";
    auto* mac_cmd = app.add_subcommand("macdonald", "finite-alphabet content polynomial of a shape");
    mac_cmd->add_option("--shape", shape_text, "comma-separated parts, e.g. 2,2,1")->required();
    mac_cmd->add_option("--vars", vars, "alphabet size N");
    mac_cmd->add_option("--stat", stat_name, "inv | quinv");
    mac_cmd->add_option("--budget", budget, "largest filling count to enumerate");
    mac_cmd->add_option("--format", format_name, "output format: text | json");
    mac_cmd->add_flag("--json", json_flag, "shorthand for --format json");
    mac_cmd->callback([&]() {
        resolve_format();
        TripleStat stat;
        if (stat_name == "inv")
            stat = TripleStat::Inv;
        else if (stat_name == "quinv")
            stat = TripleStat::Quinv;
        else
            throw DomainError("bad value for --stat: '" + stat_name + "'");
        ContentPoly cp = macdonald_poly(parse_shape(shape_text), vars, stat, budget);
        if (json) {
            nlohmann::json doc;
            doc["vars"] = cp.vars;
            nlohmann::json entries = nlohmann::json::array();
            for (const auto& [content, poly] : cp.entries) {
                nlohmann::json e;
                e["content"] = content;
                e["poly"] = poly.str();
                entries.push_back(std::move(e));
            }
            doc["entries"] = std::move(entries);
            st.out << doc.dump() << "\n";
        } else {
            st.out << cp.str();
        }
    });

    // ---- verify ---------------------------------------------------------------
    InputOpts verify_in;
    std::string theorem_text;
    int max_size = 5, max_entry = 3, max_side = 3, max_value = 0, verify_vars = 3;
    bool rectangles_only = false;
    VerifyOptions vopts;
    auto* verify_cmd = app.add_subcommand("verify", "run a theorem or lemma check");
    add_input_options(verify_cmd, verify_in);
    verify_cmd
        ->add_option("--theorem", theorem_text,
                     "T1 | T2 | phi | gamma | theta | L5.1 | L5.2 | L5.3 | L6.3 | tables | "
                     "block-partition | invq | transpose-maj | macdonald")
        ->required();
    auto* max_size_opt = verify_cmd->add_option("--max-size", max_size, "sweep bound on |shape|");
    verify_cmd->add_option("--max-entry", max_entry, "largest entry in sweeps");
    verify_cmd->add_option("--max-side", max_side, "rectangle sweep bound");
    verify_cmd->add_option("--max-value", max_value, "value bound for table checks");
    verify_cmd->add_option("--shape", shape_text, "single shape, comma-separated parts");
    verify_cmd->add_option("--vars", verify_vars, "alphabet size for macdonald");
    verify_cmd->add_flag("--rectangles", rectangles_only, "restrict a sweep to rectangle shapes");
    verify_cmd->add_option("--budget", vopts.budget, "largest enumeration allowed");
    verify_cmd->add_option("--workers", vopts.workers, "parallel sweep workers");
    verify_cmd->add_option("--violation-cap", vopts.violation_cap, "violations kept per report");
    verify_cmd->add_option("--format", format_name, "output format: text | json");
    verify_cmd->add_flag("--json", json_flag, "shorthand for --format json");
    verify_cmd->callback([&]() {
        resolve_format();
        Theorem which = theorem_from_string(theorem_text);
        bool class_mode = !verify_in.file.empty() || !verify_in.inline_filling.empty();
        VerificationReport rep;
        std::vector<Filling> members;

        if (class_mode) {
            detail::require(which == Theorem::T1 || which == Theorem::T2,
                            "class mode (--file/--filling) applies to T1 and T2 only");
            Filling f = load_filling(verify_in);
            members = enumerate_row_class(f, vopts.budget);
            rep = which == Theorem::T1 ? check_T1_class(f, vopts) : check_T2_class(f, vopts);
        } else {
            switch (which) {
                case Theorem::T1:
                case Theorem::InvQ:
                case Theorem::TransposeMaj:
                    rep = sweep(which, max_size, max_entry, rectangles_only, vopts);
                    break;
                case Theorem::T2:
                    if (!shape_text.empty())
                        rep = check_T2_shape(parse_shape(shape_text), max_entry, vopts);
                    else if (max_size_opt->count() > 0 && !rectangles_only)
                        rep = sweep(Theorem::T2, max_size, max_entry, false, vopts);
                    else
                        rep = sweep_rectangles(Theorem::T2, max_side, max_entry, vopts);
                    break;
                case Theorem::PhiSuite:
                case Theorem::GammaSuite:
                    if (!shape_text.empty()) {
                        Partition shape = parse_shape(shape_text);
                        rep = which == Theorem::PhiSuite ? check_phi_suite(shape, max_entry, vopts)
                                                         : check_gamma_suite(shape, max_entry, vopts);
                    } else {
                        rep = sweep(which, max_size, max_entry, rectangles_only, vopts);
                    }
                    break;
                case Theorem::ThetaSuite:
                    if (!shape_text.empty())
                        rep = check_theta_suite(parse_shape(shape_text), max_entry, vopts);
                    else
                        rep = sweep_rectangles(Theorem::ThetaSuite, max_side, max_entry, vopts);
                    break;
                case Theorem::L51:
                case Theorem::L52:
                case Theorem::L53:
                case Theorem::L63:
                    rep = sweep_rectangles(which, max_side, max_entry, vopts);
                    break;
                case Theorem::Tables:
                    rep = check_tables(max_value ? max_value : 6, vopts);
                    break;
                case Theorem::BlockPartition:
                    rep = check_block_partition(max_value ? max_value : 4, vopts);
                    break;
                case Theorem::Macdonald:
                    if (!shape_text.empty())
                        rep = check_macdonald(parse_shape(shape_text), verify_vars, vopts);
                    else
                        rep = sweep(Theorem::Macdonald, max_size, verify_vars, rectangles_only, vopts);
                    break;
            }
        }

        if (json) {
            nlohmann::json doc = nlohmann::json::parse(report_json_text(rep));
            if (class_mode) {
                nlohmann::json table = nlohmann::json::array();
                for (const Filling& m : members) {
                    StatBundle s = stat_bundle(m);
                    nlohmann::json e;
                    e["filling"] = serialize_filling_line(m);
                    e["maj"] = s.maj;
                    e["inv"] = s.inv;
                    e["quinv"] = s.quinv;
                    table.push_back(std::move(e));
                }
                doc["members"] = std::move(table);
            }
            st.out << doc.dump() << "\n";
        } else {
            if (class_mode) {
                st.out << "class members (maj,inv,quinv):\n";
                const std::size_t shown = std::min<std::size_t>(members.size(), 24);
                for (std::size_t i = 0; i < shown; ++i) {
                    StatBundle s = stat_bundle(members[i]);
                    st.out << "  " << serialize_filling_line(members[i]) << "  (" << s.maj << ","
                           << s.inv << "," << s.quinv << ")\n";
                }
                if (shown < members.size())
                    st.out << "  ... (" << members.size() - shown << " more)\n";
            }
            st.out << report_text(rep);
        }
        st.err << "elapsed: " << rep.elapsed_seconds << "s\n";
        st.exit_code = rep.pass() ? 0 : 1;
    });

    std::vector<const char*> argv;
    argv.push_back("quinv");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return st.exit_code;
}

}  // namespace tabstat
