#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "josephus/closed_form.hpp"
#include "josephus/errors.hpp"
#include "josephus/explorer.hpp"
#include "josephus/game.hpp"
#include "josephus/report_io.hpp"
#include "josephus/types.hpp"

namespace josephus::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kMismatch = 3, kResource = 4 };

enum class CommandKind { Survivor, Simulate, Order, ElimTime, OneLife, Verify, Sweep, CardTrick, Bench };
enum class Method { Auto, Closed, Simulate };
enum class Format { Text, Json, Csv };
enum class SweepKind { Constant, KGreaterThanN, NonCoprime };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HelpRequested {
    std::string text;
};

/// Parsed invocation. Only the fields relevant to `kind` are meaningful;
/// the rest keep their defaults.
struct Command {
    CommandKind kind = CommandKind::Survivor;
    Count n = 0;
    Count k = 0;
    Count lives = 1;
    Label soldier = 0;
    Method method = Method::Auto;
    FormulaMode mode = FormulaMode::Reconciled;
    RingKind ring = RingKind::DoublyLinked;
    Format format = Format::Text;
    std::string out;
    bool deplete = false;

    explore::Subject subject = explore::Subject::Theorem1;
    explore::SweepRange range;
    SweepKind sweep = SweepKind::Constant;
    unsigned threads = 0;
    Count slot_cap = 1'000'000'000;

    Count cards = 52;
    Count last = 4;
    Count repeat = 1;

    friend bool operator==(const Command&, const Command&) = default;
};

namespace detail {

inline const std::map<std::string, CommandKind> kCommands{
    {"survivor", CommandKind::Survivor}, {"simulate", CommandKind::Simulate},
    {"order", CommandKind::Order},       {"elim-time", CommandKind::ElimTime},
    {"one-life", CommandKind::OneLife},  {"verify", CommandKind::Verify},
    {"sweep", CommandKind::Sweep},       {"card-trick", CommandKind::CardTrick},
    {"bench", CommandKind::Bench},
};
inline const std::map<std::string, Method> kMethods{
    {"auto", Method::Auto}, {"closed", Method::Closed}, {"simulate", Method::Simulate}};
inline const std::map<std::string, FormulaMode> kModes{
    {"reconciled", FormulaMode::Reconciled}, {"paper", FormulaMode::PaperPrinted}};
inline const std::map<std::string, RingKind> kRings{
    {"dense", RingKind::DenseArray}, {"linked", RingKind::DoublyLinked}, {"indexed", RingKind::OrderStatistic}};
inline const std::map<std::string, Format> kFormats{
    {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
inline const std::map<std::string, SweepKind> kSweeps{
    {"constant", SweepKind::Constant}, {"k-gt-n", SweepKind::KGreaterThanN}, {"noncoprime", SweepKind::NonCoprime}};

template <class E>
std::string name_of(const std::map<std::string, E>& table, E value) {
    for (const auto& [name, v] : table)
        if (v == value) return name;
    return "?";
}

template <class E>
std::vector<std::string> names(const std::map<std::string, E>& table) {
    std::vector<std::string> out;
    for (const auto& [name, v] : table) out.push_back(name);
    return out;
}

inline std::vector<std::string> subject_names() {
    std::vector<std::string> out;
    for (const auto& [s, name] : explore::kSubjectNames) out.emplace_back(name);
    return out;
}

}  // namespace detail

/// Parses argv-style arguments (without the program name).
/// Throws UsageError naming the offending flag, or HelpRequested.
inline Command parse(const std::vector<std::string>& args) {
    using namespace detail;
    if (args.empty()) throw UsageError("missing subcommand");
    const auto found = kCommands.find(args.front());
    if (found == kCommands.end()) {
        if (args.front() == "--help" || args.front() == "-h") {
            std::string text = "josephus <subcommand> [flags]\nsubcommands:";
            for (const auto& [name, kind] : kCommands) text += " " + name;
            throw HelpRequested{text + "\n"};
        }
        throw UsageError("unknown subcommand '" + args.front() + "'");
    }

    Command cmd;
    cmd.kind = found->second;
    CLI::App app{"josephus " + found->first, "josephus " + found->first};
    app.set_help_flag("-h,--help");

    std::string method = "auto", mode = "reconciled", ring = "linked", format = "text";
    std::string subject = "Theorem1", sweep = "constant";

    const CLI::Validator positive_int(
        [](std::string& v) -> std::string {
            if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char ch) { return std::isdigit(ch); }))
                return "expected a positive integer, got '" + v + "'";
            if (v.find_first_not_of('0') == std::string::npos) return "must be at least 1";
            return {};
        },
        "POSITIVE");
    auto pos = [&](CLI::Option* o) { return o->check(positive_int); };
    auto add_nk = [&](bool n_required) {
        auto* o = pos(app.add_option("--n", cmd.n, "soldier count"));
        if (n_required) o->required();
        pos(app.add_option("--k", cmd.k, "hit-block length"))->required();
    };
    auto add_lives = [&] { pos(app.add_option("--lives", cmd.lives, "lives per soldier")); };
    auto add_ring = [&] { app.add_option("--ring", ring)->check(CLI::IsMember(names(kRings))); };
    auto add_output = [&] {
        app.add_option("--format", format)->check(CLI::IsMember(names(kFormats)));
        app.add_option("--out", cmd.out, "write output to PATH");
    };
    auto add_range = [&] {
        pos(app.add_option("--k-min", cmd.range.k_min));
        pos(app.add_option("--k-max", cmd.range.k_max));
        pos(app.add_option("--n-min", cmd.range.n_min));
        pos(app.add_option("--n-max", cmd.range.n_max));
        pos(app.add_option("--lives-min", cmd.range.lives_min));
        pos(app.add_option("--lives-max", cmd.range.lives_max));
        app.add_flag("--coprime-only", cmd.range.coprime_only);
        app.add_option("--threads", cmd.threads, "worker threads (0: all cores)");
        pos(app.add_option("--slot-cap", cmd.slot_cap, "simulated slot ceiling"));
    };

    switch (cmd.kind) {
        case CommandKind::Survivor:
            add_nk(true);
            add_lives();
            app.add_option("--method", method)->check(CLI::IsMember(names(kMethods)));
            app.add_option("--mode", mode)->check(CLI::IsMember(names(kModes)));
            add_ring();
            add_output();
            break;
        case CommandKind::Simulate:
            add_nk(true);
            add_lives();
            add_ring();
            add_output();
            break;
        case CommandKind::Order:
            add_nk(true);
            add_lives();
            add_ring();
            app.add_flag("--deplete", cmd.deplete, "play until no soldier is left (lives == 1)");
            add_output();
            break;
        case CommandKind::ElimTime:
            add_nk(true);
            app.add_option("--soldier", cmd.soldier, "0-based label")->required();
            add_output();
            break;
        case CommandKind::OneLife:
            add_nk(true);
            add_lives();
            add_ring();
            add_output();
            break;
        case CommandKind::Verify:
            app.add_option("--subject", subject)->required()->check(CLI::IsMember(subject_names()));
            add_range();
            add_ring();
            add_output();
            break;
        case CommandKind::Sweep:
            app.add_option("--kind", sweep)->required()->check(CLI::IsMember(names(kSweeps)));
            pos(app.add_option("--k", cmd.k, "block length (constant sweep)"));
            add_range();
            add_ring();
            add_output();
            break;
        case CommandKind::CardTrick:
            pos(app.add_option("--cards", cmd.cards, "deck size"));
            pos(app.add_option("--k", cmd.k, "cards dealt down per round"))->required();
            pos(app.add_option("--last", cmd.last, "how many final cards to predict"));
            add_output();
            break;
        case CommandKind::Bench:
            add_nk(true);
            add_lives();
            pos(app.add_option("--repeat", cmd.repeat));
            add_output();
            break;
    }

    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cmd.method = kMethods.at(method);
    cmd.mode = kModes.at(mode);
    cmd.ring = kRings.at(ring);
    cmd.format = kFormats.at(format);
    if (cmd.kind == CommandKind::Verify) cmd.subject = *explore::parse_subject(subject);
    if (cmd.kind == CommandKind::Sweep) cmd.sweep = kSweeps.at(sweep);

    if (cmd.kind == CommandKind::ElimTime && cmd.soldier >= cmd.n) {
        throw UsageError("--soldier: must be less than --n");
    }
    if (cmd.kind == CommandKind::Order && cmd.deplete && cmd.lives != 1) {
        throw UsageError("--deplete: requires --lives 1");
    }
    if (cmd.kind == CommandKind::Verify || cmd.kind == CommandKind::Sweep) {
        try {
            explore::validate(cmd.range);
        } catch (const DomainError& e) {
            throw UsageError(std::string("range: ") + e.what());
        }
    }
    if (cmd.kind == CommandKind::Sweep && cmd.sweep == SweepKind::Constant && cmd.k == 0) {
        throw UsageError("--k: required for --kind constant");
    }
    return cmd;
}

/// Canonical argument vector; parse(to_args(c)) == c for any parsed c.
inline std::vector<std::string> to_args(const Command& c) {
    using namespace detail;
    std::vector<std::string> a{name_of(kCommands, c.kind)};
    auto flag = [&](const std::string& name, const auto& value) {
        a.push_back(name);
        if constexpr (std::is_convertible_v<decltype(value), std::string>) {
            a.push_back(value);
        } else {
            a.push_back(std::to_string(value));
        }
    };
    auto output = [&] {
        flag("--format", name_of(kFormats, c.format));
        if (!c.out.empty()) flag("--out", c.out);
    };
    auto range = [&] {
        flag("--k-min", c.range.k_min);
        flag("--k-max", c.range.k_max);
        flag("--n-min", c.range.n_min);
        flag("--n-max", c.range.n_max);
        flag("--lives-min", c.range.lives_min);
        flag("--lives-max", c.range.lives_max);
        if (c.range.coprime_only) a.push_back("--coprime-only");
        flag("--threads", c.threads);
        flag("--slot-cap", c.slot_cap);
    };
    switch (c.kind) {
        case CommandKind::Survivor:
            flag("--n", c.n), flag("--k", c.k), flag("--lives", c.lives);
            flag("--method", name_of(kMethods, c.method));
            flag("--mode", name_of(kModes, c.mode));
            flag("--ring", name_of(kRings, c.ring));
            output();
            break;
        case CommandKind::Simulate:
        case CommandKind::OneLife:
            flag("--n", c.n), flag("--k", c.k), flag("--lives", c.lives);
            flag("--ring", name_of(kRings, c.ring));
            output();
            break;
        case CommandKind::Order:
            flag("--n", c.n), flag("--k", c.k), flag("--lives", c.lives);
            flag("--ring", name_of(kRings, c.ring));
            if (c.deplete) a.push_back("--deplete");
            output();
            break;
        case CommandKind::ElimTime:
            flag("--n", c.n), flag("--k", c.k), flag("--soldier", c.soldier);
            output();
            break;
        case CommandKind::Verify:
            flag("--subject", std::string(explore::to_string(c.subject)));
            range();
            flag("--ring", name_of(kRings, c.ring));
            output();
            break;
        case CommandKind::Sweep:
            flag("--kind", name_of(kSweeps, c.sweep));
            if (c.k != 0) flag("--k", c.k);
            range();
            flag("--ring", name_of(kRings, c.ring));
            output();
            break;
        case CommandKind::CardTrick:
            flag("--cards", c.cards), flag("--k", c.k), flag("--last", c.last);
            output();
            break;
        case CommandKind::Bench:
            flag("--n", c.n), flag("--k", c.k), flag("--lives", c.lives), flag("--repeat", c.repeat);
            output();
            break;
    }
    return a;
}

namespace detail {

using nlohmann::json;

inline std::string join(const std::vector<Label>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string ordinal_suffix(Count x) {
    const Count tens = x % 100;
    if (tens >= 11 && tens <= 13) return std::to_string(x) + "th";
    switch (x % 10) {
        case 1: return std::to_string(x) + "st";
        case 2: return std::to_string(x) + "nd";
        case 3: return std::to_string(x) + "rd";
        default: return std::to_string(x) + "th";
    }
}

inline std::string route_name(FelineRoute r) {
    switch (r) {
        case FelineRoute::Theorem1: return "one-life";
        case FelineRoute::Theorem3: return "lives-equal-k";
        case FelineRoute::Simulation: return "simulation";
    }
    return "?";
}

inline int survivor_cmd(const Command& c, std::ostream& os) {
    Label survivor = 0;
    std::string how;
    if (c.method == Method::Simulate) {
        survivor = survivor_of({c.n, c.k, c.lives}, c.ring);
        how = "simulation";
    } else {
        const Count cap = c.method == Method::Closed ? 0 : kDefaultSimulationCap;
        FelineResult res;
        try {
            res = survivor_feline_detail(c.n, c.k, c.lives, cap, c.mode);
        } catch (const ResourceError&) {
            if (c.method == Method::Closed) throw DomainError("no closed form applies to this configuration");
            throw;
        }
        survivor = res.survivor;
        how = route_name(res.route);
        if (res.scalings > 0) how += "+scaling";
    }
    switch (c.format) {
        case Format::Text: os << survivor << '\n'; break;
        case Format::Json:
            os << json{{"n", c.n}, {"k", c.k}, {"lives", c.lives}, {"survivor", survivor}, {"method", how}}.dump()
               << '\n';
            break;
        case Format::Csv: os << "n,k,lives,survivor\n" << c.n << ',' << c.k << ',' << c.lives << ',' << survivor << '\n'; break;
    }
    return kOk;
}

inline int outcome_cmd(const Command& c, std::ostream& os, bool order_only) {
    const RunMode mode = c.deplete ? RunMode::Depletion : RunMode::Survivor;
    const auto outcome = run({c.n, c.k, c.lives}, mode, c.ring);
    switch (c.format) {
        case Format::Text:
            if (order_only) {
                os << join(outcome.order_labels()) << '\n';
            } else {
                os << "survivor: " << (outcome.survivor ? std::to_string(*outcome.survivor) : "none") << '\n'
                   << "order: " << join(outcome.order_labels()) << '\n';
            }
            break;
        case Format::Json: os << io::outcome_json(outcome).dump() << '\n'; break;
        case Format::Csv:
            os << "label,ordinal\n";
            for (const auto& e : outcome.order) os << e.soldier << ',' << e.ordinal << '\n';
            if (!order_only && outcome.survivor) os << *outcome.survivor << ",\n";
            break;
    }
    return kOk;
}

inline int elim_time_cmd(const Command& c, std::ostream& os) {
    const Count t = elim_time_t2(c.n, c.k, c.soldier);
    switch (c.format) {
        case Format::Text: os << t << '\n'; break;
        case Format::Json:
            os << json{{"n", c.n}, {"k", c.k}, {"soldier", c.soldier}, {"ordinal", t}}.dump() << '\n';
            break;
        case Format::Csv: os << "n,k,soldier,ordinal\n" << c.n << ',' << c.k << ',' << c.soldier << ',' << t << '\n'; break;
    }
    return kOk;
}

inline int one_life_cmd(const Command& c, std::ostream& os) {
    const GameConfig cfg{c.n, c.k, c.lives};
    const auto snap = one_life_snapshot(cfg, c.ring);
    const bool algebra_applies = std::gcd(c.n, c.k + 1) == 1 && c.lives < c.k;
    std::optional<OneLifeAlgebra> alg;
    if (algebra_applies) alg = one_life_algebra(c.n, c.k, c.lives);
    std::optional<bool> matches;
    if (alg) {
        auto a = alg->result, b = snap ? snap->alive : std::vector<Label>{};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        matches = snap && a == b;
    }

    switch (c.format) {
        case Format::Text:
            if (snap) {
                os << "snapshot: cursor " << snap->cursor << ", slots " << snap->slots_elapsed << ", alive "
                   << join(snap->alive) << '\n';
            } else {
                os << "snapshot: none\n";
            }
            if (alg) {
                os << "paper algorithm: S2 " << join(alg->s2) << ", L " << alg->offset_l << ", drop "
                   << alg->drop_count << (alg->anomaly ? " (anomaly)" : "") << ", S " << join(alg->result) << '\n'
                   << "match: " << (*matches ? "yes" : "no") << '\n';
            }
            break;
        case Format::Json: {
            json j = {{"n", c.n}, {"k", c.k}, {"lives", c.lives}};
            j["snapshot"] = snap ? json{{"alive", snap->alive}, {"cursor", snap->cursor},
                                        {"slots_elapsed", snap->slots_elapsed}}
                                 : json(nullptr);
            j["paper"] = alg ? json{{"s2", alg->s2},
                                    {"L", alg->offset_l},
                                    {"drop_count", alg->drop_count},
                                    {"anomaly", alg->anomaly},
                                    {"result", alg->result}}
                             : json(nullptr);
            j["matches"] = matches ? json(*matches) : json(nullptr);
            os << j.dump() << '\n';
            break;
        }
        case Format::Csv:
            os << "n,k,lives,cursor,slots_elapsed,alive,paper_result,matches\n"
               << c.n << ',' << c.k << ',' << c.lives << ',';
            if (snap) os << snap->cursor << ',' << snap->slots_elapsed << ',' << join(snap->alive, " ");
            else os << ",,";
            os << ',' << (alg ? join(alg->result, " ") : "") << ',';
            if (matches) os << (*matches ? "yes" : "no");
            os << '\n';
            break;
    }
    return kOk;
}

inline int verify_cmd(const Command& c, std::ostream& os) {
    const auto rep = explore::verify(c.subject, c.range, {c.threads, c.slot_cap, c.ring});
    switch (c.format) {
        case Format::Text:
            os << explore::to_string(rep.subject) << ": checked " << rep.checked << ", mismatches "
               << rep.mismatches.size() << (rep.complete ? "" : ", INCOMPLETE (slot cap)") << '\n';
            for (const auto& m : rep.mismatches) {
                os << "  k=" << m.config.k << " n=" << m.config.n << " lives=" << m.config.lives;
                if (m.config.soldier) os << " soldier=" << *m.config.soldier;
                os << " expected=" << io::to_csv_field(m.expected) << " oracle=" << io::to_csv_field(m.oracle)
                   << '\n';
            }
            break;
        case Format::Json: os << io::to_json(rep).dump(2) << '\n'; break;
        case Format::Csv: os << io::to_csv(rep); break;
    }
    if (!rep.mismatches.empty()) return kMismatch;
    return rep.complete ? kOk : kResource;
}

inline int sweep_cmd(const Command& c, std::ostream& os) {
    const explore::SweepOptions opts{c.threads, c.slot_cap, c.ring};
    auto emit_rows = [&](const auto& rows, auto text_line) {
        switch (c.format) {
            case Format::Text:
                for (const auto& r : rows) os << text_line(r) << '\n';
                break;
            case Format::Json: os << io::to_json(rows).dump(2) << '\n'; break;
            case Format::Csv: os << io::to_csv(rows); break;
        }
    };
    switch (c.sweep) {
        case SweepKind::Constant: {
            const auto rows = explore::sweep_constant_survivor(c.k, c.range.n_max, c.range.lives_max, opts);
            emit_rows(rows, [](const explore::SurvivorRow& r) {
                return "n=" + std::to_string(r.n) + " survivor=" + std::to_string(r.survivor);
            });
            break;
        }
        case SweepKind::KGreaterThanN: {
            const auto rows = explore::survey_k_greater_than_n(c.range.k_max, c.range.n_max, opts);
            emit_rows(rows, [](const explore::SurvivorRow& r) {
                return "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
                       " survivor=" + std::to_string(r.survivor);
            });
            break;
        }
        case SweepKind::NonCoprime: {
            const auto rows = explore::survey_noncoprime(c.range, opts);
            emit_rows(rows, [](const explore::NonCoprimeRow& r) {
                std::string s = "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
                                " lives=" + std::to_string(r.lives) + " survivor=" + std::to_string(r.survivor);
                if (r.scaling_holds) s += std::string(" scaling=") + (*r.scaling_holds ? "holds" : "fails");
                return s;
            });
            break;
        }
    }
    return kOk;
}

/// Final cards of a dealt deck: each round moves one card to the bottom and
/// deals k face down. Cards are 0-based labels; positions are 1-based.
inline int card_trick_cmd(const Command& c, std::ostream& os) {
    std::vector<Count> when(c.cards);
    for (Label x = 0; x < c.cards; ++x) when[x] = elim_time_t2(c.cards, c.k, x);
    std::vector<Label> by_time(c.cards);
    for (Label x = 0; x < c.cards; ++x) by_time[when[x] - 1] = x;
    const Count tail = std::min(c.last, c.cards);
    const std::vector<Label> last(by_time.end() - static_cast<std::ptrdiff_t>(tail), by_time.end());

    switch (c.format) {
        case Format::Text: {
            os << "deck of " << c.cards << ", one card to the bottom then " << c.k << " dealt down\n";
            os << "last " << tail << " in order: " << join(last, ", ") << '\n';
            os << "as dealt:";
            for (std::size_t i = 0; i < last.size(); ++i)
                os << (i ? ", " : " ") << ordinal_suffix(last[i] + 1) << " card";
            os << '\n' << "card position dealt_at\n";
            for (Label x = 0; x < c.cards; ++x) os << x << ' ' << x + 1 << ' ' << when[x] << '\n';
            break;
        }
        case Format::Json: {
            json cards = json::array();
            for (Label x = 0; x < c.cards; ++x) cards.push_back({{"card", x}, {"position", x + 1}, {"dealt_at", when[x]}});
            std::vector<Count> positions;
            for (Label x : last) positions.push_back(x + 1);
            os << json{{"cards", c.cards}, {"k", c.k}, {"last", last}, {"last_positions", positions}, {"deck", cards}}
                      .dump()
               << '\n';
            break;
        }
        case Format::Csv:
            os << "card,position,dealt_at\n";
            for (Label x = 0; x < c.cards; ++x) os << x << ',' << x + 1 << ',' << when[x] << '\n';
            break;
    }
    return kOk;
}

inline int bench_cmd(const Command& c, std::ostream& os) {
    const GameConfig cfg{c.n, c.k, c.lives};
    json rows = json::array();
    for (RingKind ring : {RingKind::DenseArray, RingKind::DoublyLinked, RingKind::OrderStatistic}) {
        double best = 0;
        Label survivor = 0;
        for (Count rep = 0; rep < c.repeat; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            survivor = survivor_of(cfg, ring);
            const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
            if (rep == 0 || dt.count() < best) best = dt.count();
        }
        rows.push_back({{"ring", std::string(to_string(ring))}, {"ms", best}, {"survivor", survivor}});
    }
    switch (c.format) {
        case Format::Text:
            for (const auto& r : rows)
                os << std::left << std::setw(8) << r["ring"].get<std::string>() << std::fixed << std::setprecision(3)
                   << r["ms"].get<double>() << " ms  survivor " << r["survivor"].get<Label>() << '\n';
            break;
        case Format::Json: os << json{{"n", c.n}, {"k", c.k}, {"lives", c.lives}, {"timings", rows}}.dump() << '\n'; break;
        case Format::Csv:
            os << "ring,ms,survivor\n";
            for (const auto& r : rows)
                os << r["ring"].get<std::string>() << ',' << r["ms"].get<double>() << ',' << r["survivor"].get<Label>()
                   << '\n';
            break;
    }
    return kOk;
}

inline int dispatch(const Command& c, std::ostream& os) {
    switch (c.kind) {
        case CommandKind::Survivor: return survivor_cmd(c, os);
        case CommandKind::Simulate: return outcome_cmd(c, os, false);
        case CommandKind::Order: return outcome_cmd(c, os, true);
        case CommandKind::ElimTime: return elim_time_cmd(c, os);
        case CommandKind::OneLife: return one_life_cmd(c, os);
        case CommandKind::Verify: return verify_cmd(c, os);
        case CommandKind::Sweep: return sweep_cmd(c, os);
        case CommandKind::CardTrick: return card_trick_cmd(c, os);
        case CommandKind::Bench: return bench_cmd(c, os);
    }
    return kUsage;
}

}  // namespace detail

/// Runs a parsed command. Output goes to `out`, or to the --out file.
inline int execute(const Command& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.out.empty()) return detail::dispatch(c, out);
        std::ostringstream buffer;
        const int code = detail::dispatch(c, buffer);
        std::ofstream file(c.out);
        if (!file) {
            err << "error: cannot open " << c.out << '\n';
            return kUsage;
        }
        file << buffer.str();
        return code;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::invalid_argument& e) {  // precondition, unsupported mode
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return execute(parse(args), out, err);
    } catch (const HelpRequested& h) {
        out << h.text;
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace josephus::cli
