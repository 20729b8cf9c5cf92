#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wittrep/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<std::uint64_t> parse_primes(const std::string& prime_flag,
                                        const std::string& primes_flag) {
    std::vector<std::uint64_t> primes;
    std::string list = primes_flag.empty() ? prime_flag : primes_flag;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) primes.push_back(std::stoull(tok));
    if (primes.empty()) throw std::invalid_argument("no prime given");
    for (std::uint64_t p : primes) wittrep::require_valid_prime(p);
    return primes;
}

std::string render(const wittrep::VerificationReport& rep, const std::string& format) {
    if (format == "json") return wittrep::render_json(rep);
    if (format == "md") return wittrep::render_markdown(rep);
    return wittrep::render_text(rep);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write to " + out_path);
        f << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted representations of the Witt algebra W(1) over F_p: "
                 "construction, composition series, and verification"};
    app.require_subcommand(1);

    std::string prime_flag, primes_flag, format = "text", out_path, selector;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-p,--prime", prime_flag, "prime p > 3");
        cmd->add_option("--primes", primes_flag, "comma-separated list of primes");
        cmd->add_option("--format", format, "output format: text|md|json")
            ->check(CLI::IsMember({"text", "md", "json"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run the full verification pipeline");
    add_common(verify);
    CLI::App* selftest = app.add_subcommand("selftest", "run only the axiom/invariant suites");
    add_common(selftest);
    CLI::App* series = app.add_subcommand("series", "print a composition series");
    add_common(series);
    series->add_option("-m,--module", selector,
                       "module selector: A1|A2|AsPlus|AaPlus|LxL|adjoint|Z:<l>|L:<l>")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        std::vector<std::uint64_t> primes = parse_primes(prime_flag, primes_flag);

        if (series->parsed()) {
            std::string text;
            for (std::uint64_t p : primes) {
                wittrep::SeriesLine line = wittrep::run_series(p, selector);
                text += "p=" + std::to_string(p) + " " + selector + ": " +
                        wittrep::format_series(line, p) + "\n";
            }
            emit(text, out_path);
            return kExitPass;
        }

        bool all_ok = true;
        std::vector<std::string> parts;
        for (std::uint64_t p : primes) {
            wittrep::VerificationReport rep =
                verify->parsed() ? wittrep::run_verify(p) : wittrep::run_selftest(p);
            all_ok = all_ok && rep.all_passed();
            parts.push_back(render(rep, format));
        }
        std::string text;
        if (format == "json" && parts.size() > 1) {
            // batch JSON is a single array, one report object per prime
            text = "[\n";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                std::string& part = parts[i];
                while (!part.empty() && part.back() == '\n') part.pop_back();
                text += part;
                text += i + 1 < parts.size() ? ",\n" : "\n";
            }
            text += "]\n";
        } else {
            for (const std::string& part : parts) text += part;
        }
        emit(text, out_path);
        return all_ok ? kExitPass : kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
