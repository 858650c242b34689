#include "ocoh/ocoh.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant calculator for compatible O-operators,"
                 " their cohomology, deformations and dendriform relatives"};
    app.require_subcommand(1);

    std::string input, format = "text", complex_kind = "co";
    int degree = 0;
    int order = -1;
    app.add_option("--input", input, "workspace JSON document")->required();
    app.add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* c_check = app.add_subcommand("check", "run every structural check the document supports");
    CLI::App* c_coh = app.add_subcommand("cohomology", "cohomology dimension of one complex");
    c_coh->add_option("--complex", complex_kind, "o | co | cass | coa | cdend")->required();
    c_coh->add_option("--degree", degree, "cochain degree")->required();
    CLI::App* c_mc = app.add_subcommand("mc", "Maurer-Cartan defect of (pi[1],(T1,T2))");
    CLI::App* c_ob = app.add_subcommand("obstruct", "obstruction cochain of the deformation block");
    c_ob->add_option("--order", order, "truncate the deformation at this order");
    CLI::App* c_ext = app.add_subcommand("extend", "extension witness for the deformation block");
    c_ext->add_option("--order", order, "truncate the deformation at this order");
    CLI::App* c_aybe = app.add_subcommand("aybe", "Yang-Baxter checks and induced operators");
    CLI::App* c_dend = app.add_subcommand("dendriform", "dendriform axioms, differential and cohomology");
    c_dend->add_option("--degree", degree, "report cohomology up to this degree");
    CLI::App* c_ind = app.add_subcommand("induce", "write the structures induced by the operator pair");

    for (CLI::App* sub : {c_check, c_coh, c_mc, c_ob, c_ext, c_aybe, c_dend, c_ind}) sub->fallthrough(true);

    CLI11_PARSE(app, argc, argv);

    std::string cmd;
    for (CLI::App* sub : {c_check, c_coh, c_mc, c_ob, c_ext, c_aybe, c_dend, c_ind})
        if (sub->parsed()) cmd = sub->get_name();

    try {
        const auto t0 = std::chrono::steady_clock::now();
        ocoh::io::WorkspaceDocument doc = ocoh::io::parse_workspace(read_file(input));
        ocoh::io::CommandOptions opts;
        opts.complex_kind = complex_kind;
        opts.degree = degree;
        if (order >= 0) opts.order = order;
        ocoh::io::Report rep = ocoh::io::run_command(cmd, doc, opts);
        std::cout << ocoh::io::emit_report(rep, format);
        const auto t1 = std::chrono::steady_clock::now();
        std::cerr << "elapsed: " << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                  << " ms\n";
        return rep.all_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
