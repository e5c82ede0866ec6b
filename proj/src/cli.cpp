#include "lctr/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <optional>

#include "lctr/analytics.hpp"
#include "lctr/bench.hpp"
#include "lctr/errors.hpp"
#include "lctr/service.hpp"
#include "lctr/solver_fast.hpp"
#include "lctr/solver_oracle.hpp"

namespace lctr::cli {

namespace {

struct Range {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;
};

// "7" or "1..12".
Range parse_range(const std::string& text) {
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
            throw InvalidFamilyParam("bad range '" + text + "'");
        }
        return std::stoull(s);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = number(text);
        return {v, v};
    }
    const Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    if (r.lo > r.hi) throw InvalidFamilyParam("empty range '" + text + "'");
    return r;
}

void print_census(std::ostream& out, Game game, const std::string& partition_text, const std::string& family,
                  const std::string& r_text, const std::string& c_text, bool closed_form) {
    out << analytics::csv_header() << '\n';
    if (family.empty()) {
        if (closed_form) throw UnsupportedQuery("--closed-form needs --family");
        const Partition p = parse_partition(partition_text);
        out << analytics::csv_row("partition", game, p.rows(), p.first(), analytics::census(game, p)) << '\n';
        return;
    }
    const FamilyKind kind = parse_family(family);
    const Range rs = parse_range(r_text);
    const Range cs = kind == FamilyKind::Staircase ? Range{0, 0} : parse_range(c_text);
    for (std::uint64_t r = rs.lo; r <= rs.hi; ++r) {
        for (std::uint64_t c = cs.lo; c <= cs.hi; ++c) {
            const FamilySpec spec{kind, r, c};
            const auto t = closed_form ? analytics::census_closed_form(game, spec)
                                       : analytics::census(game, make_family(spec));
            out << analytics::csv_row(family_name(kind), game, r, c, t) << '\n';
        }
    }
}

void print_grid(std::ostream& out, Game game, const Partition& p) {
    switch (game) {
        case Game::LctrNormal: out << oracle::oracle_sg_lctr(p).dump(); break;
        case Game::DownrightNormal: out << oracle::oracle_sg_downright(p).dump(); break;
        case Game::LctrMisere: out << oracle::oracle_misere_pn(p).dump(); break;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"LCTR and Downright solver"};
    app.require_subcommand(1);

    std::string game_text = "lctr";
    std::string partition_text;

    auto* sg_cmd = app.add_subcommand("sg", "SG value (normal play) or P/N (misère) of a partition");
    sg_cmd->add_option("--game", game_text, "lctr, downright or lctr-misere");
    sg_cmd->add_option("partition", partition_text, "parts like \"6,5,4^2,1\"")->required();

    auto* grid_cmd = app.add_subcommand("grid", "oracle grid of every subposition");
    grid_cmd->add_option("--game", game_text, "lctr, downright or lctr-misere");
    grid_cmd->add_option("partition", partition_text)->required();

    std::string family;
    std::string r_text = "1";
    std::string c_text = "1";
    bool closed_form = false;
    auto* census_cmd = app.add_subcommand("census", "game-tree nodes, leaves and states as CSV");
    census_cmd->add_option("--game", game_text, "lctr or downright");
    census_cmd->add_option("partition", partition_text);
    census_cmd->add_option("--family", family, "staircase, rectangle or gamma");
    census_cmd->add_option("--r", r_text, "r or a range lo..hi");
    census_cmd->add_option("--c", c_text, "c or a range lo..hi");
    census_cmd->add_flag("--closed-form", closed_form, "use the closed forms instead of the DP");

    unsigned max_exponent = 20;
    unsigned repetitions = 3;
    auto* bench_cmd = app.add_subcommand("bench", "probe and cell counts on staircases as CSV");
    bench_cmd->add_option("--max-exponent", max_exponent, "largest k with r = 2^k")
        ->check(CLI::Range(bench::kMinExponent, bench::kMaxExponent));
    bench_cmd->add_option("--repetitions", repetitions)->check(CLI::Range(1u, 100u));

    std::string host = "127.0.0.1";
    std::optional<int> port;
    auto* serve_cmd = app.add_subcommand("serve", "HTTP JSON service (PORT overrides the default port)");
    serve_cmd->add_option("--host", host);
    serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*sg_cmd) {
            const Game game = parse_game(game_text);
            const Partition p = parse_partition(partition_text);
            const SubpositionView v(p);
            if (game == Game::LctrMisere) {
                out << outcome_char(outcome(game, v)) << '\n';
            } else {
                out << sg(game, v).value() << '\n';
            }
        } else if (*grid_cmd) {
            print_grid(out, parse_game(game_text), parse_partition(partition_text));
        } else if (*census_cmd) {
            print_census(out, parse_game(game_text), partition_text, family, r_text, c_text, closed_form);
        } else if (*bench_cmd) {
            out << bench::bench_csv_header() << '\n';
            for (const auto& rec : bench::run_bench(max_exponent, repetitions)) out << bench::bench_csv_row(rec) << '\n';
        } else if (*serve_cmd) {
            int bind_port = 8080;
            if (const char* env = std::getenv("PORT")) {
                try {
                    bind_port = std::stoi(env);
                } catch (const std::exception&) {
                    err << "PORT must be a number\n";
                    return kExitUsage;
                }
            }
            if (port) bind_port = *port;
            return service::serve(host, bind_port, err) ? 0 : kExitFailure;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotAPartition& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidFamilyParam& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedQuery& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EmptyBoard& e) {
        err << "error: " << e.what() << '\n';
        return kExitEmptyBoard;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}

}  // namespace lctr::cli
