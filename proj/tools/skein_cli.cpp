// skein: exact computations in the Hecke algebras and the annulus skein.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skein/parse.hpp"
#include "skein/psi.hpp"
#include "skein/repn.hpp"
#include "skein/trace.hpp"
#include "skein/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
    bool pretty = false;
    std::string path;

    void emit(const nlohmann::json& j, const std::string& text) const {
        const std::string body = pretty ? text : j.dump();
        if (path.empty()) {
            std::cout << body << "\n";
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path + " for writing");
        out << body << "\n";
    }
};

std::string schur_text(const skein::SchurExpansion& f) {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [lambda, c] : f) {
        if (!out.empty()) out += " + ";
        out += "(" + skein::to_string(c) + ")*s" + skein::to_string(lambda);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hecke algebra and annulus skein computations"};
    app.require_subcommand(1);
    Output output;
    app.add_flag("--pretty", output.pretty, "Human-readable output instead of JSON");
    app.add_option("--out", output.path, "Write the result to a file");

    int n = 4;
    int degree = 4;
    int strands = 0;
    std::string word_text;
    std::string elem_text;
    std::string theorem;

    auto* verify = app.add_subcommand("verify", "Run exact identity checks");
    verify->add_option("theorem", theorem, "Check id")->required();
    verify->add_option("--n", n, "Strand bound");
    verify->add_option("--degree", degree, "Degree bound");

    auto* homfly = app.add_subcommand("homfly", "HOMFLY polynomial of a closed braid");
    homfly->add_option("--strands", strands, "Number of strands")->required();
    homfly->add_option("--word", word_text, "Braid word, e.g. \"1 -2 1 -2\"")->required();

    auto* closure = app.add_subcommand("closure", "Closure of a braid in the Schur basis");
    closure->add_option("--strands", strands, "Number of strands")->required();
    closure->add_option("--word", word_text, "Braid word")->required();

    auto* characters = app.add_subcommand("characters", "Character table of H_n on basis braids");
    characters->add_option("--n", n, "Strands")->required();

    auto* psi_cmd = app.add_subcommand("psi", "Image of a symmetric function in the centre of H_n");
    psi_cmd->add_option("--n", n, "Strands")->required();
    psi_cmd->add_option("--elem", elem_text, "Element, e.g. \"h2 - h1*h1\"")->required();

    auto* eval = app.add_subcommand("eval", "Plane evaluation of a symmetric function");
    eval->add_option("--elem", elem_text, "Element")->required();

    for (auto* sub : app.get_subcommands({})) {
        sub->add_flag("--pretty", output.pretty, "Human-readable output instead of JSON");
        sub->add_option("--out", output.path, "Write the result to a file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            skein::VerifyReport report = skein::run_verify(theorem, n, degree);
            output.emit(report.to_json(), report.to_text());
            return report.passed ? kExitPass : kExitFail;
        }
        if (*homfly || *closure) {
            const auto word = skein::parse_braid_word(word_text);
            if (*homfly) {
                auto result = skein::homfly(strands, word);
                output.emit({{"polynomial", skein::to_json(result.polynomial)}, {"writhe", result.writhe}},
                            skein::to_string(result.polynomial) + "  (writhe " +
                                std::to_string(result.writhe) + ")");
            } else {
                if (strands < 1 || strands > skein::kMaxStrands)
                    throw std::invalid_argument("--strands must be in 1.." + std::to_string(skein::kMaxStrands));
                for (int g : word)
                    if (g >= strands || -g >= strands)
                        throw skein::ParseError("generator out of range", std::to_string(g));
                auto f = skein::closure_schur(skein::word_elt(strands, word));
                output.emit(skein::schur_to_json(f), schur_text(f));
            }
            return kExitPass;
        }
        if (*characters) {
            if (n < 0 || n > skein::kMaxStrands)
                throw std::invalid_argument("--n must be in 0.." + std::to_string(skein::kMaxStrands));
            auto table = skein::character_table_json(n);
            output.emit(table, table.dump(2));
            return kExitPass;
        }
        if (*psi_cmd) {
            if (n < 0 || n > skein::kMaxStrands)
                throw std::invalid_argument("--n must be in 0.." + std::to_string(skein::kMaxStrands));
            auto x = skein::psi(n, skein::parse_element(elem_text));
            output.emit(skein::to_json(x), skein::to_string(x));
            return kExitPass;
        }
        if (*eval) {
            auto value = skein::ev_sym(skein::parse_element(elem_text));
            output.emit(skein::to_json(value), skein::to_string(value));
            return kExitPass;
        }
    } catch (const skein::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
