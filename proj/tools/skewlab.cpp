#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skewlab/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"skewlab: property deciders and theorem checks for skew polynomial arithmetic "
                 "over finite rings"};

    std::string config_path;
    std::string format = "human";
    std::uint64_t seed = 0;
    std::uint64_t budget = 50'000'000;
    bool parallel = false;
    bool catalog = false;

    app.add_option("config", config_path, "config file with ring/endo declarations and tasks");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--seed", seed, "seed for sampled scans, echoed in verdicts");
    app.add_option("--budget", budget, "largest exhaustive enumeration");
    app.add_flag("--parallel", parallel, "run tasks concurrently, output flushed in order");
    app.add_flag("--catalog", catalog, "run the built-in catalog through every theorem");

    CLI11_PARSE(app, argc, argv);

    skewlab::RunOptions opt;
    opt.format = format == "machine" ? skewlab::Format::Machine : skewlab::Format::Human;
    opt.seed = seed;
    opt.budget = budget;
    opt.parallel = parallel;

    try {
        if (catalog) return skewlab::run_catalog(opt, std::cout);
        if (config_path.empty()) {
            std::cerr << "error: provide a config file or --catalog\n";
            return 2;
        }
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open " << config_path << "\n";
            return 2;
        }
        std::ostringstream text;
        text << in.rdbuf();
        skewlab::ConfigDocument doc = skewlab::parse_config(text.str());
        return skewlab::run(doc, opt, std::cout);
    } catch (const skewlab::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const skewlab::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const skewlab::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const skewlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
