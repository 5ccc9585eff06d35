#ifndef COXMUT_TOOLS_CLI_HPP
#define COXMUT_TOOLS_CLI_HPP

// `coxmut` command line. Exit codes: 0 success, 1 invalid input,
// 2 verification failure, 3 cap exceeded.

#include "service.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace coxmut::tools {

enum Exit : int { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kCapExceeded = 3 };

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Input read_input(const std::string& path) { return Input::from_json(parse_json_text(read_file(path))); }

inline void print_report(std::ostream& out, const ManifoldReport& r)
{
    out << "canonical key:      " << r.key.hex() << '\n'
        << "mutation type:      " << r.mutation_type << '\n'
        << "W_0:                " << r.w0_components << " (" << r.geometry.name() << ", dim " << r.geometry.dimension
        << ", signature " << r.geometry.signature.positive << "," << r.geometry.signature.zero << ","
        << r.geometry.signature.negative << ")\n";
    if (r.group_order) out << "|W|:                " << r.group_order->get_str() << " (" << r.weyl_type << ")\n";
    if (r.quotient_order) out << "|W_0/W_C| (cosets): " << r.quotient_order->get_str() << '\n';
    out << "chi_orb:            " << r.chi_orb.get_str() << '\n';
    if (r.chi_X) out << "chi(X):             " << r.chi_X->get_str() << '\n';
    if (r.cusps) {
        out << "cusps:              " << r.cusps->total.get_str() << '\n';
        for (const auto& c : r.cusps->classes) {
            out << "  ideal vertex {";
            for (std::size_t i = 0; i < c.subset.size(); ++i) out << (i ? "," : "") << c.subset[i] + 1;
            out << "} " << c.type << ": " << r.group_order->get_str() << "/" << c.stabilizer_order.get_str() << " = "
                << c.count.get_str() << '\n';
        }
    }
    if (r.compact) out << "compact:            " << (*r.compact ? "yes" : "no") << '\n';
    if (r.volume)
        out << "volume:             " << r.volume->coeff.get_str() << " pi^" << r.volume->pi_power << " ~ "
            << r.volume->approx() << '\n';
    if (r.genus) out << "genus:              " << r.genus->get_str() << '\n';
    if (r.torsion)
        out << "torsion-free:       "
            << (r.torsion->torsion_free ? (*r.torsion->torsion_free ? "yes" : "no") : "inconclusive") << " ("
            << r.torsion->entries.size() << " parabolic subgroups compared)\n";
    for (const auto& n : r.notes) out << "note: " << n << '\n';
}

inline int run_tables(int which, bool json, std::ostream& out, const Caps& caps)
{
    bool ok = true;
    Json rows = Json::array();
    for (const auto& row : tables::table(which)) {
        const auto r = run_row(row, caps.cls);
        ok = ok && r.passed();
        if (json)
            rows.push_back(to_json(r));
        else
            out << summary(r) << std::endl;
    }
    std::vector<VolumeCheck> checks;
    if (which == 1) checks = volume_crosschecks();
    if (which == 2) checks.push_back(same_manifold_check(tables::table2()[1], tables::table1()[1]));
    for (const auto& c : checks) {
        ok = ok && c.passed();
        if (!json)
            out << (c.passed() ? "PASS" : "FAIL") << " volume " << c.name << ": " << c.computed << " vs "
                << c.reference << " (relative error " << c.relative_error() << ", tolerance " << c.tolerance << ")\n";
    }
    if (json) out << Json{{"table", which}, {"passed", ok}, {"rows", rows}}.dump(2) << '\n';
    return ok ? kOk : kVerifyFailed;
}

inline int serve(const std::string& host, int port, const std::string& dump, const Caps& caps, std::ostream& out)
{
    Service service(caps, dump);
    httplib::Server srv;
    service.mount(srv);
    if (port == 0) {
        port = srv.bind_to_any_port(host);
        if (port < 0) throw InvalidInput("cannot bind " + host);
        out << "listening on http://" << host << ":" << port << std::endl;
        return srv.listen_after_bind() ? kOk : kInvalid;
    }
    out << "listening on http://" << host << ":" << port << std::endl;
    if (!srv.listen(host, port)) throw InvalidInput("cannot listen on " + host + ":" + std::to_string(port));
    return kOk;
}

/// Runs one command line; args exclude the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quiver mutation, Coxeter group presentations and manifold invariants"};
    app.require_subcommand(1);
    std::string input, output, extra, dump, host = "127.0.0.1";
    std::vector<int> ks;
    std::size_t max_size = 0;
    bool json = false;
    int table = 0, port = 8080;

    auto* mutate_cmd = app.add_subcommand("mutate", "mutate at vertices K (1-based, applied in order)");
    mutate_cmd->add_option("-i,--input", input, "diagram JSON")->required();
    mutate_cmd->add_option("-k", ks, "vertex")->required();
    mutate_cmd->add_option("-o,--output", output, "write the result here instead of stdout");

    auto* class_cmd = app.add_subcommand("class", "enumerate the mutation class");
    class_cmd->add_option("-i,--input", input, "diagram JSON")->required();
    class_cmd->add_option("--max", max_size, "class size cap");

    auto* classify_cmd = app.add_subcommand("classify", "mutation type");
    classify_cmd->add_option("-i,--input", input, "diagram JSON")->required();

    auto* present_cmd = app.add_subcommand("present", "emit the presentation of W");
    present_cmd->add_option("-i,--input", input, "diagram JSON")->required();
    present_cmd->add_option("--extra", extra, "file with extra `rel` lines");

    auto* analyze_cmd = app.add_subcommand("analyze", "manifold report");
    analyze_cmd->add_option("-i,--input", input, "diagram JSON")->required();
    analyze_cmd->add_flag("--json", json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "torsion certificate; exit 0 iff torsion-free");
    verify_cmd->add_option("-i,--input", input, "diagram JSON")->required();

    auto* tables_cmd = app.add_subcommand("tables", "reproduce the reference tables");
    tables_cmd->add_option("--check", table, "table number")->required()->check(CLI::IsMember({1, 2}));
    tables_cmd->add_flag("--json", json, "JSON output");

    auto* serve_cmd = app.add_subcommand("serve", "HTTP service");
    serve_cmd->add_option("--port", port, "port (0 picks a free one)");
    serve_cmd->add_option("--host", host, "bind address");
    serve_cmd->add_option("--dump", dump, "export sessions to this JSON file after every change");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kInvalid;
    }

    try {
        Caps caps = Caps::from_env();
        if (*mutate_cmd) {
            Input in = read_input(input);
            ExchangeMatrix m = in.matrix;
            for (int k : ks) {
                if (k < 1 || static_cast<Index>(k) > m.rank())
                    throw InvalidInput("vertex " + std::to_string(k) + " out of range 1.." + std::to_string(m.rank()));
                m = coxmut::mutate(m, static_cast<Index>(k - 1));
            }
            const std::string text = to_json(m).dump() + "\n";
            if (output.empty()) {
                out << text;
            } else {
                std::ofstream f(output);
                if (!f) throw InvalidInput("cannot write " + output);
                f << text;
            }
            return kOk;
        }
        if (*class_cmd) {
            if (max_size) caps.cls.max_size = max_size;
            const auto e = mutation_class(read_input(input).matrix, caps.cls);
            out << to_json(e).dump(2) << '\n';
            return e.complete() ? kOk : kCapExceeded;
        }
        if (*classify_cmd) {
            const ExchangeMatrix m = read_input(input).matrix;
            out << to_json(classify_mutation_type(m, caps.cls), m).dump(2) << '\n';
            return kOk;
        }
        if (*present_cmd) {
            Input in = read_input(input);
            std::vector<ExtraRelator> rels = in.custom ? in.custom->extra : std::vector<ExtraRelator>{};
            if (!extra.empty()) {
                auto more = parse_extra_relators(read_file(extra), in.matrix.rank());
                rels.insert(rels.end(), more.begin(), more.end());
            }
            out << emit_presentation(build_presentation(diagram_view(in.matrix), rels));
            return kOk;
        }
        if (*analyze_cmd) {
            const auto rep = analyze(read_input(input), caps);
            if (json)
                out << to_json(rep).dump(2) << '\n';
            else
                print_report(out, rep);
            return kOk;
        }
        if (*verify_cmd) {
            Input in = read_input(input);
            TorsionCertificate cert;
            if (in.custom) {
                cert = *analyze(in, caps).torsion;
            } else {
                const auto t = classify_mutation_type(in.matrix, caps.cls);
                if (t.kind == MutationType::Kind::FiniteType)
                    cert = torsion_certificate(in.matrix, realize_finite(*t.representative, t.witness.reversed()));
                else if (t.kind == MutationType::Kind::AffineType)
                    cert = verify_torsion_free_affine(in.matrix, caps.closure, caps.cls);
                else
                    throw WrongType("verify: mutation type " + t.name() + " has no concrete representation of W");
            }
            out << to_json(cert).dump(2) << '\n';
            if (!cert.torsion_free) return kCapExceeded;
            return *cert.torsion_free ? kOk : kVerifyFailed;
        }
        if (*tables_cmd) return run_tables(table, json, out, caps);
        if (*serve_cmd) return serve(host, port, dump, caps, out);
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kInvalid;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalid;
    } catch (const WrongType& e) {
        err << "not applicable: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}

} // namespace coxmut::tools

#endif // COXMUT_TOOLS_CLI_HPP
