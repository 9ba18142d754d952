// qstack: exact counting, enumeration, and verification for brick stacks,
// ballot-style 0/1 sequences, and cyclic-arrangement statistics.
//
// Exit codes: 0 on OK/PASS, 1 on FAIL, 2 on usage errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qstack/applications.hpp"
#include "qstack/brickstack.hpp"
#include "qstack/counting.hpp"
#include "qstack/cyclelemma.hpp"
#include "qstack/seqcore.hpp"
#include "qstack/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string kind;
    std::string input;
    std::optional<std::uint64_t> q, m, n, k, p, ones, max_size, cap;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool shaved = false;
};

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "usage error: " << message << "\n";
    std::exit(kExitUsage);
}

std::uint64_t need(const std::optional<std::uint64_t>& value, const char* flag) {
    if (!value) usage_error(std::string("missing required flag ") + flag);
    return *value;
}

nlohmann::json stack_json(const brickstack::BrickStack& s) {
    return nlohmann::json{{"q", s.q}, {"m", s.base_length}, {"rows", s.rows}};
}

// Refuses to start an enumeration whose size already exceeds the cap.
void check_cap(const counting::CountValue& total, std::uint64_t cap) {
    if (total > counting::CountValue(cap)) {
        usage_error("would emit " + total.to_decimal() + " objects; raise --cap to allow more");
    }
}

int run_count(const Options& opt) {
    const unsigned q = static_cast<unsigned>(opt.q.value_or(1));
    if (opt.kind == "stacks") {
        const std::uint64_t m = need(opt.m, "--m");
        if (opt.n) {
            std::cout << counting::count_q_stacks(m, *opt.n, q).to_decimal() << "\n";
            return kExitOk;
        }
        const counting::CountValue total = counting::count_q_stacks_total(m, q);
        counting::CountValue nonempty;  // total minus the n = 0 term
        for (std::uint64_t n = 1; (q + 1) * n <= m; ++n)
            nonempty += counting::count_q_stacks(m, n, q);
        std::cout << "total=" << total.to_decimal() << " nonempty=" << nonempty.to_decimal()
                  << "\n";
    } else if (opt.kind == "satisfying") {
        if (opt.k) {
            std::cout << counting::count_q_satisfying(*opt.k, need(opt.p, "--p"), q).to_decimal()
                      << "\n";
        } else {
            std::cout << counting::count_q_satisfying_length(need(opt.m, "--m"), q).to_decimal()
                      << "\n";
        }
    } else if (opt.kind == "catalan") {
        std::cout << counting::catalan(need(opt.n, "--n")).to_decimal() << "\n";
    } else if (opt.kind == "gcatalan") {
        std::cout << counting::generalized_catalan(need(opt.n, "--n"), q).to_decimal() << "\n";
    } else if (opt.kind == "raney") {
        std::cout << counting::generalized_catalan(need(opt.k, "--k"), q).to_decimal() << "\n";
    } else if (opt.kind == "trees") {
        std::cout << counting::generalized_catalan(need(opt.n, "--n"), q).to_decimal() << "\n";
    } else {
        usage_error("unknown count kind \"" + opt.kind +
                    "\" (stacks, satisfying, catalan, gcatalan, raney, trees)");
    }
    return kExitOk;
}

int run_enumerate(const Options& opt) {
    const unsigned q = static_cast<unsigned>(opt.q.value_or(1));
    const std::uint64_t cap = opt.cap.value_or(100000);
    const bool json = opt.format == "json";
    if (opt.format != "text" && opt.format != "json") usage_error("--format must be text or json");

    if (opt.kind == "stacks") {
        const std::uint64_t m = need(opt.m, "--m");
        check_cap(opt.n ? counting::count_q_stacks(m, *opt.n, q)
                        : counting::count_q_stacks_total(m, q),
                  cap);
        brickstack::enumerate_stacks(m, q, [&](const brickstack::BrickStack& s) {
            if (opt.n && s.base_brick_count() != *opt.n) return;
            std::cout << (json ? stack_json(s).dump() : s.str()) << "\n";
        });
    } else if (opt.kind == "sequences") {
        const std::uint64_t m = need(opt.m, "--m");
        if (opt.ones) {
            const std::uint64_t span = (q + 1) * *opt.ones;
            check_cap(span <= m ? counting::count_q_satisfying(*opt.ones, m - span + 1, q)
                                : counting::CountValue(),
                      cap);
        } else {
            check_cap(counting::count_q_satisfying_length(m, q), cap);
        }
        seqcore::enumerate_q_satisfying(
            m, q, opt.ones ? std::optional<std::size_t>(*opt.ones) : std::nullopt,
            [&](const seqcore::BitString& b) {
                std::cout << (json ? nlohmann::json{{"bits", b.str()}}.dump() : b.str()) << "\n";
            });
    } else if (opt.kind == "arrangements") {
        const std::uint64_t ones = need(opt.ones, "--ones");
        const std::uint64_t m = need(opt.m, "--m (total length)");
        if (m < ones) usage_error("--ones may not exceed --m");
        const std::uint64_t zeros = m - ones;
        check_cap(counting::count_arrangements(ones, zeros), cap);
        seqcore::enumerate_arrangements(ones, zeros, [&](const seqcore::CyclicArrangement& a) {
            std::cout << (json ? nlohmann::json{{"cyc", a.str().substr(4)}}.dump() : a.str())
                      << "\n";
        });
    } else if (opt.kind == "raney") {
        const std::uint64_t k = need(opt.k, "--k");
        check_cap(counting::generalized_catalan(k, q), cap);
        applications::enumerate_raney(k, q, [&](const applications::RaneySequence& r) {
            std::cout << (json ? nlohmann::json{{"terms", r.terms()}}.dump() : r.str()) << "\n";
        });
    } else if (opt.kind == "trees") {
        const std::uint64_t n = need(opt.n, "--n");
        check_cap(counting::generalized_catalan(n, q), cap);
        applications::enumerate_plane_trees(n, q, [&](const applications::PlaneTree& t) {
            std::cout << (json ? nlohmann::json{{"tree", t.str()}}.dump() : t.str()) << "\n";
        });
    } else {
        usage_error("unknown enumerate kind \"" + opt.kind +
                    "\" (stacks, sequences, arrangements, raney, trees)");
    }
    return kExitOk;
}

int run_map(const Options& opt) {
    try {
        if (opt.kind == "seq-to-stack") {
            const seqcore::BitString b = seqcore::BitString::parse(opt.input);
            const unsigned q = static_cast<unsigned>(need(opt.q, "--q"));
            const brickstack::BrickStack s = brickstack::sequence_to_stack(b, q);
            if (!(brickstack::stack_to_sequence(s) == b))
                throw std::logic_error("map does not invert");
            std::cout << s.str() << "\n";
        } else if (opt.kind == "stack-to-seq") {
            const brickstack::BrickStack s = brickstack::BrickStack::parse(opt.input);
            const seqcore::BitString b = brickstack::stack_to_sequence(s);
            if (!(brickstack::sequence_to_stack(b, s.q) == s))
                throw std::logic_error("map does not invert");
            std::cout << b.str() << "\n";
        } else {
            usage_error("unknown map direction \"" + opt.kind +
                        "\" (seq-to-stack, stack-to-seq)");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitOk;
}

int finish_sweep(const sweeps::SweepReport& report) {
    if (report.pass()) {
        std::cout << "PASS " << report.name << " checked=" << report.checked << "\n";
        return kExitOk;
    }
    for (const auto& line : report.failures) std::cerr << line << "\n";
    std::cout << "FAIL " << report.name << " checked=" << report.checked
              << " failures=" << report.failure_count << "\n";
    return kExitFail;
}

int run_verify(const Options& opt) {
    const unsigned q = static_cast<unsigned>(opt.q.value_or(3));
    if (opt.kind == "cycle") {
        return finish_sweep(sweeps::cycle_lemma(opt.max_size.value_or(16), q));
    }
    if (opt.kind == "strong") {
        return finish_sweep(sweeps::strong_lemma(opt.max_size.value_or(16), q));
    }
    if (opt.kind == "stronger") {
        return finish_sweep(sweeps::stronger_lemma(opt.max_size.value_or(12), q));
    }
    if (opt.kind == "extended") {
        const std::size_t len = opt.max_size.value_or(14);
        const std::size_t p = opt.p.value_or(4);
        int rc = finish_sweep(sweeps::extended_lemma(len, p, q));
        rc |= finish_sweep(sweeps::blocked_tightness(len, p, q));
        rc |= finish_sweep(sweeps::augmentation(std::min<std::size_t>(len, 12), q));
        rc |= finish_sweep(sweeps::periodic_family(3, q, 2));
        return rc ? kExitFail : kExitOk;
    }
    if (opt.kind == "position-sum") {
        return finish_sweep(sweeps::position_sum(opt.max_size.value_or(16)));
    }
    if (opt.kind == "chung-feller") {
        return finish_sweep(sweeps::chung_feller(opt.n.value_or(7)));
    }
    if (opt.kind == "montagh") {
        int rc = finish_sweep(sweeps::montagh_exhaustive(4, 3));
        rc |= finish_sweep(
            sweeps::montagh_random(opt.cap.value_or(10000), opt.n.value_or(8), 6, opt.seed));
        return rc ? kExitFail : kExitOk;
    }
    if (opt.kind == "bijection") {
        int rc = finish_sweep(sweeps::bijection(opt.m.value_or(10), q));
        rc |= finish_sweep(sweeps::catalan_models(6, q, 5));
        return rc ? kExitFail : kExitOk;
    }
    if (opt.kind == "recurrences") {
        int rc = finish_sweep(sweeps::recurrences(opt.m.value_or(40), q, opt.n.value_or(12), 20));
        rc |= finish_sweep(sweeps::satisfying_counts(opt.max_size.value_or(14), q));
        return rc ? kExitFail : kExitOk;
    }
    usage_error("unknown verify suite \"" + opt.kind +
                "\" (cycle, strong, stronger, extended, position-sum, chung-feller, montagh, "
                "bijection, recurrences)");
}

int run_render(const Options& opt) {
    try {
        const brickstack::BrickStack s = brickstack::BrickStack::parse(opt.input);
        std::cout << brickstack::render_ascii(s, opt.shaved);
    } catch (const std::invalid_argument& e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of q-stacks, ballot sequences, and cyclic arrangements"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", opt.q, "brick/ballot parameter q");
        sub->add_option("--m", opt.m, "base length / sequence length / zero count");
        sub->add_option("--n", opt.n, "object size parameter");
        sub->add_option("--k", opt.k, "number of ones / number of -q terms");
        sub->add_option("--p", opt.p, "zero surplus parameter");
        sub->add_option("--ones", opt.ones, "number of ones");
        sub->add_option("--max-size", opt.max_size, "sweep size bound");
        sub->add_option("--cap", opt.cap, "output / sample cap");
        sub->add_option("--seed", opt.seed, "random seed for sampled sweeps");
        sub->add_option("--format", opt.format, "output format: text or json");
    };

    CLI::App* count = app.add_subcommand("count", "print an exact count");
    count->add_option("kind", opt.kind, "stacks|satisfying|catalan|gcatalan|raney|trees")
        ->required();
    add_common(count);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list objects, one per line");
    enumerate->add_option("kind", opt.kind, "stacks|sequences|arrangements|raney|trees")
        ->required();
    add_common(enumerate);

    CLI::App* map = app.add_subcommand("map", "apply the stack/sequence bijection");
    map->add_option("direction", opt.kind, "seq-to-stack|stack-to-seq")->required();
    map->add_option("input", opt.input, "bit string or stack text form")->required();
    add_common(map);

    CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("suite", opt.kind,
                       "cycle|strong|stronger|extended|position-sum|chung-feller|montagh|"
                       "bijection|recurrences")
        ->required();
    add_common(verify);

    CLI::App* render = app.add_subcommand("render", "draw a stack");
    render->add_option("input", opt.input, "stack text form")->required();
    render->add_flag("--shaved", opt.shaved, "draw shaved (slanted) bricks");
    add_common(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (map->parsed()) return run_map(opt);
        if (verify->parsed()) return run_verify(opt);
        if (render->parsed()) return run_render(opt);
    } catch (const std::invalid_argument& e) {
        usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "FAIL: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
