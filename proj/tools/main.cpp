#include "qcas/errors.hpp"
#include "qcas/scenario/registry.hpp"
#include "qcas/scenario/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 2;
constexpr int kExitInvalid = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qcas::ConfigurationError("cannot write '" + path + "'");
    out << content;
}

void apply_overrides(qcas::scenario::Scenario& sc, const std::vector<std::string>& overrides) {
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw qcas::ConfigurationError("--tolerance expects key=value, got '" + item + "'");
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw qcas::ConfigurationError("malformed tolerance value in '" + item + "'");
        }
        sc.tolerances.set(item.substr(0, eq), value);
    }
}

void print_invalid(const qcas::scenario::RunReport& rep) {
    for (const auto& p : rep.points)
        if (!p.valid) std::cerr << "point " << p.index << ": " << p.error_kind << " error: " << p.error_message << "\n";
}

int cmd_run(const std::string& scene, const std::string& out, const std::string& csv, bool strict,
            const std::vector<std::string>& overrides, unsigned threads) {
    qcas::scenario::Scenario sc = qcas::scenario::resolve_scenario(scene);
    apply_overrides(sc, overrides);
    qcas::scenario::RunOptions options;
    options.threads = threads;
    const qcas::scenario::RunReport rep = qcas::scenario::run(sc, options);
    print_invalid(rep);
    if (strict && rep.invalid_points > 0) return kExitInvalid;
    const std::string json = qcas::scenario::to_json(rep);
    if (out.empty()) std::cout << json;
    else write_file(out, json);
    if (!csv.empty()) write_file(csv, qcas::scenario::to_csv(rep));
    if (rep.invalid_points == static_cast<int>(rep.points.size())) return kExitInvalid;
    return rep.any_violated() ? kExitViolated : kExitOk;
}

int cmd_list() {
    for (const auto& s : qcas::scenario::builtin_scenes())
        std::cout << s.name << "\t" << s.kind << "\t" << s.description << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& scene, const std::vector<std::string>& overrides) {
    qcas::scenario::Scenario sc = qcas::scenario::resolve_scenario(scene);
    apply_overrides(sc, overrides);
    const qcas::scenario::RunReport rep = qcas::scenario::validate(sc);
    for (const auto& p : rep.points) {
        std::cout << "point " << p.index << ": ";
        if (p.valid) std::cout << "ok\n";
        else std::cout << p.error_kind << " error: " << p.error_message << "\n";
    }
    return rep.invalid_points > 0 ? kExitInvalid : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casorati curvature inequality checker"};
    app.require_subcommand(1);

    std::string scene, out, csv;
    bool strict = false;
    unsigned threads = 0;
    std::vector<std::string> overrides;

    CLI::App* run = app.add_subcommand("run", "Evaluate a scene and write the report");
    run->add_option("scenario", scene, "Scene file or builtin name")->required();
    run->add_option("-o,--output", out, "JSON report path (default: stdout)");
    run->add_option("--csv", csv, "CSV report path");
    run->add_flag("--strict", strict, "Fail with exit code 3 on any invalid point");
    run->add_option("--tolerance", overrides, "Tolerance override key=value")->take_all();
    run->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

    CLI::App* list = app.add_subcommand("list", "List builtin scenes");

    CLI::App* validate = app.add_subcommand("validate", "Check scene invariants without evaluating theorems");
    validate->add_option("scenario", scene, "Scene file or builtin name")->required();
    validate->add_option("--tolerance", overrides, "Tolerance override key=value")->take_all();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(scene, out, csv, strict, overrides, threads);
        if (list->parsed()) return cmd_list();
        if (validate->parsed()) return cmd_validate(scene, overrides);
    } catch (const qcas::Error& e) {
        std::cerr << e.kind() << " error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
