// Copyright 2026 The dccode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dccode/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <functional>
#include <thread>
#include <utility>

#include "dccode/tables.hpp"

namespace dccode {

namespace {

constexpr std::array<std::string_view, 5> kKindNames = {"selfdual_dc", "extremal_dc", "lcd_dc", "bordered_selfdual",
                                                        "bordered_lcd"};
constexpr std::array<std::string_view, 3> kPolicyNames = {"always", "spot", "off"};
constexpr std::array<std::string_view, 2> kFormatNames = {"csv", "json"};
constexpr std::array<std::string_view, 8> kPredicateNames = {
    "thm_upto20",          "thm_22",           "thm_24_44",  "generator_weight", "gcd_criterion",
    "bordered_conditions", "bordered_lcd_thm", "oracle_only"};

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const std::array<std::string_view, N>& names, const char* what) {
    for (std::size_t i = 0; i < N; ++i) {
        if (names[i] == s) return static_cast<E>(i);
    }
    std::string msg = std::string("unknown ") + what + " '" + std::string(s) + "' (expected one of";
    for (auto n : names) msg += " " + std::string(n);
    throw std::invalid_argument(msg + ")");
}

bool is_bordered(SearchKind k) { return k == SearchKind::bordered_selfdual || k == SearchKind::bordered_lcd; }

// Outcome of the predicate chain for one pattern. `property` is the quantity
// the kind classifies: extremality for self-dual kinds, LCD for LCD kinds.
enum class Tri : std::uint8_t { no, yes, undecided };

struct Outcome {
    PredicateUsed predicate;
    Tri property;
    friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct Survivor {
    Word bits;
    Outcome outcome;
};

Tri to_tri(std::optional<bool> b) {
    if (!b) return Tri::undecided;
    return *b ? Tri::yes : Tri::no;
}

// Predicate chain; nullopt means the pattern is rejected.
std::optional<Outcome> classify(SearchKind kind, const RingElement& f) {
    switch (kind) {
        case SearchKind::selfdual_dc:
        case SearchKind::extremal_dc: {
            const DcDescriptor d(f);
            if (!is_self_dual(d)) return std::nullopt;
            return Outcome{extremality_route(d.m(), weight(f)), to_tri(predicted_extremal(d))};
        }
        case SearchKind::lcd_dc:
            if (!dc_is_lcd(DcDescriptor(f))) return std::nullopt;
            return Outcome{PredicateUsed::gcd_criterion, Tri::yes};
        case SearchKind::bordered_selfdual:
            if (!is_self_dual(BorderedDescriptor(f, false))) return std::nullopt;
            return Outcome{PredicateUsed::bordered_conditions, Tri::undecided};
        case SearchKind::bordered_lcd: {
            const BorderedDescriptor b(f, false);
            if (!bordered_lcd_parity_ok(b)) return std::nullopt;
            if (dc_is_lcd(DcDescriptor(complement(f)))) return Outcome{PredicateUsed::bordered_lcd_thm, Tri::yes};
            return Outcome{PredicateUsed::oracle_only, Tri::undecided};
        }
    }
    return std::nullopt;
}

// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
// claimed through an atomic counter; the exception of the lowest failing
// index is rethrown so failures do not depend on scheduling.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task) {
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::pair<std::size_t, std::exception_ptr>> errors(threads, {count, nullptr});
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        task(i);
                    } catch (...) {
                        if (i < errors[t].first) errors[t] = {i, std::current_exception()};
                    }
                }
            });
        }
    }
    const auto first = std::min_element(errors.begin(), errors.end(),
                                        [](const auto& a, const auto& b) { return a.first < b.first; });
    if (first->second) std::rethrow_exception(first->second);
}

// The zero pattern has no reciprocal; it forms a class of its own.
std::vector<RingElement> orbit_of(const RingElement& f) {
    if (f.is_zero()) return {f};
    return equivalence_class(DcDescriptor(f));
}

std::string describe(std::size_t m, const RingElement& f) { return "m=" + std::to_string(m) + ", f=" + to_string(f); }

std::vector<Survivor> enumerate_survivors(const SearchConfig& cfg, std::size_t m) {
    // Fix the top w bits of the pattern: 2^w shards, about four per worker.
    std::size_t w = 0;
    while (w < m && (std::size_t{1} << w) < 4 * static_cast<std::size_t>(std::max(1u, cfg.workers))) ++w;
    const std::size_t shards = std::size_t{1} << w;
    const std::size_t low_bits = m - w;

    std::vector<std::vector<Survivor>> per_shard(shards);
    parallel_for(shards, cfg.workers, [&](std::size_t s) {
        const Word lo = static_cast<Word>(s) << low_bits;
        const Word hi = lo + (Word{1} << low_bits);
        auto& out = per_shard[s];
        for (Word bits = lo; bits < hi; ++bits) {
            if (cfg.weight_filter && !cfg.weight_filter->contains(static_cast<std::size_t>(std::popcount(bits)))) {
                continue;
            }
            const RingElement f = RingElement::from_bits(m, bits);
            if (auto o = classify(cfg.kind, f)) out.push_back({bits, *o});
        }
    });

    std::vector<Survivor> merged;
    for (auto& v : per_shard) merged.insert(merged.end(), v.begin(), v.end());
    // Shards cover increasing ranges, so this is a no-op kept for safety.
    std::stable_sort(merged.begin(), merged.end(), [](const Survivor& a, const Survivor& b) { return a.bits < b.bits; });
    return merged;
}

// Groups survivors into equivalence classes. Every member of an orbit must
// survive with an identical outcome; the returned representative is the
// orbit minimum.
std::vector<Survivor> dedupe(std::size_t m, const std::vector<Survivor>& survivors) {
    auto find = [&](Word bits) -> const Survivor* {
        auto it = std::lower_bound(survivors.begin(), survivors.end(), bits,
                                   [](const Survivor& s, Word b) { return s.bits < b; });
        return (it != survivors.end() && it->bits == bits) ? &*it : nullptr;
    };
    std::vector<bool> seen(survivors.size(), false);
    std::vector<Survivor> reps;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (seen[i]) continue;
        const Survivor& s = survivors[i];
        const RingElement f = RingElement::from_bits(m, s.bits);
        const std::vector<RingElement> orbit = orbit_of(f);
        for (const RingElement& g : orbit) {
            const Survivor* other = find(g.to_bits());
            if (other == nullptr || other->outcome != s.outcome) {
                throw CrossCheckFailure("equivalence class classified inconsistently: " + describe(m, f) + " vs " +
                                        to_string(g));
            }
            seen[static_cast<std::size_t>(other - survivors.data())] = true;
        }
        if (orbit.front() != f) {
            throw CrossCheckFailure("first survivor of its class is not canonical: " + describe(m, f));
        }
        reps.push_back(s);
    }
    return reps;
}

struct ClassResult {
    SearchReport report;
    bool keep = true;
};

ClassResult finish_class(const SearchConfig& cfg, std::size_t m, const Survivor& s, bool run_oracle) {
    const RingElement f = RingElement::from_bits(m, s.bits);
    const bool bordered = is_bordered(cfg.kind);
    ClassResult r;
    SearchReport& rep = r.report;
    rep.m = m;
    rep.canonical_f = to_string(f);
    rep.weight = weight(f);
    rep.n = bordered ? 2 * m + 2 : 2 * m;
    rep.k = bordered ? m + 1 : m;
    rep.predicate_used = s.outcome.predicate;

    const bool lcd_kind = cfg.kind == SearchKind::lcd_dc || cfg.kind == SearchKind::bordered_lcd;
    std::optional<bool> property;
    if (s.outcome.property != Tri::undecided) property = s.outcome.property == Tri::yes;

    const DcDescriptor dc(f);
    const BorderedDescriptor bd(f, false);
    if (bordered) {
        rep.self_dual = is_self_dual(bd);
        rep.lcd = lcd_kind ? property.value_or(false) : false;
    } else {
        rep.self_dual = is_self_dual(dc);
        rep.lcd = dc_is_lcd(dc);
    }

    if (run_oracle || !property) {
        const BinaryCode code = bordered ? build(bd) : build(dc);
        const CodeMetrics mt = compute_metrics(code);
        const bool oracle_extremal = mt.self_dual && mt.min_distance == extremal_bound(code.length());
        const bool oracle_lcd = mt.hull_dimension == 0;
        const auto fail = [&](const std::string& what) {
            throw CrossCheckFailure(what + " disagrees with the oracle for " + describe(m, f) + " (predicate " +
                                    std::string(to_string(s.outcome.predicate)) + ")");
        };
        if (mt.self_dual != rep.self_dual) fail("self-duality predicate");
        if (lcd_kind) {
            if (property && *property != oracle_lcd) fail("LCD predicate");
            property = oracle_lcd;
            rep.lcd = oracle_lcd;
        } else {
            if (property && *property != oracle_extremal) fail("extremality predicate");
            property = oracle_extremal;
            if (oracle_lcd != rep.lcd) fail("LCD predicate");
        }
        rep.d = mt.min_distance;
        rep.oracle_confirmed = true;
    } else if (!lcd_kind && *property) {
        rep.d = extremal_bound(rep.n);
    } else if (rep.weight == 1 && !bordered) {
        rep.d = 2;
    }

    if (lcd_kind) {
        r.keep = *property;
    } else {
        rep.extremal = *property;
        r.keep = cfg.kind != SearchKind::extremal_dc || rep.extremal;
    }
    return r;
}

void validate(const SearchConfig& cfg) {
    if (cfg.m_min < 1) throw std::invalid_argument("search: m must be at least 1");
    if (cfg.m_min > cfg.m_max) throw std::invalid_argument("search: empty m range");
    if (cfg.workers < 1) throw std::invalid_argument("search: workers must be positive");
    const std::size_t cap = is_bordered(cfg.kind) ? kMaxSearchMBordered : kMaxSearchMDc;
    if (cfg.m_max > cap) {
        throw std::invalid_argument("search: m=" + std::to_string(cfg.m_max) + " exceeds the limit " +
                                    std::to_string(cap) + " for kind " + std::string(to_string(cfg.kind)));
    }
    if (cfg.table_reproduction && cfg.oracle == OraclePolicy::off) {
        throw std::invalid_argument("search: table reproduction requires the oracle");
    }
}

}  // namespace

std::string_view to_string(SearchKind k) noexcept { return kKindNames[static_cast<std::size_t>(k)]; }
std::string_view to_string(OraclePolicy p) noexcept { return kPolicyNames[static_cast<std::size_t>(p)]; }
std::string_view to_string(OutputFormat f) noexcept { return kFormatNames[static_cast<std::size_t>(f)]; }
std::string_view to_string(PredicateUsed p) noexcept { return kPredicateNames[static_cast<std::size_t>(p)]; }

SearchKind parse_search_kind(std::string_view s) { return parse_enum<SearchKind>(s, kKindNames, "kind"); }
OraclePolicy parse_oracle_policy(std::string_view s) { return parse_enum<OraclePolicy>(s, kPolicyNames, "oracle"); }
OutputFormat parse_output_format(std::string_view s) { return parse_enum<OutputFormat>(s, kFormatNames, "format"); }
PredicateUsed parse_predicate_used(std::string_view s) {
    return parse_enum<PredicateUsed>(s, kPredicateNames, "predicate");
}

OraclePolicy effective_oracle_policy(const SearchConfig& cfg, std::size_t m) noexcept {
    return cfg.oracle.value_or(m <= 16 ? OraclePolicy::always : OraclePolicy::spot);
}

PredicateUsed extremality_route(std::size_t m, std::size_t w) {
    if (m == 0) throw std::invalid_argument("extremality_route: m must be positive");
    if (2 * m <= 20) return PredicateUsed::thm_upto20;
    // (1, f) is itself a codeword of weight w + 1.
    if (w + 1 < extremal_bound(2 * m)) return PredicateUsed::generator_weight;
    if (m == 11 && w == 5) return PredicateUsed::thm_22;
    if (m >= 12 && m <= 22 && w == 7) return PredicateUsed::thm_24_44;
    return PredicateUsed::oracle_only;
}

std::optional<bool> predicted_extremal(const DcDescriptor& d) {
    if (!is_self_dual(d)) throw std::invalid_argument("predicted_extremal: code is not self-dual");
    switch (extremality_route(d.m(), weight(d.f()))) {
        case PredicateUsed::thm_upto20:
            return extremal_upto20(d);
        case PredicateUsed::thm_22:
            return extremal_22(d);
        case PredicateUsed::thm_24_44:
            return extremal_24_44(d);
        case PredicateUsed::generator_weight:
            return false;
        default:
            return std::nullopt;
    }
}

bool bordered_alpha0_is_lcd(const BorderedDescriptor& b) {
    if (!bordered_lcd_parity_ok(b)) return false;
    if (dc_is_lcd(DcDescriptor(complement(b.f())))) return true;
    return hull_dimension(build(b)) == 0;
}

std::vector<SearchReport> search(const SearchConfig& cfg, SearchStats* stats) {
    validate(cfg);
    std::vector<SearchReport> out;
    for (std::size_t m = cfg.m_min; m <= cfg.m_max; ++m) {
        const std::vector<Survivor> survivors = enumerate_survivors(cfg, m);
        const std::vector<Survivor> reps = dedupe(m, survivors);
        const OraclePolicy policy = effective_oracle_policy(cfg, m);

        std::vector<ClassResult> results(reps.size());
        parallel_for(reps.size(), cfg.workers, [&](std::size_t i) {
            bool run = policy == OraclePolicy::always;
            if (policy == OraclePolicy::spot) {
                run = i % kSpotInterval == 0 ||
                      (!is_bordered(cfg.kind) && is_table_row_class(m, RingElement::from_bits(m, reps[i].bits)));
            }
            results[i] = finish_class(cfg, m, reps[i], run);
        });

        std::uint64_t kept = 0;
        for (auto& r : results) {
            if (!r.keep) continue;
            out.push_back(std::move(r.report));
            ++kept;
        }
        if (stats != nullptr) {
            stats->survivors[m] = survivors.size();
            stats->classes[m] = kept;
        }
    }
    return out;
}

}  // namespace dccode
