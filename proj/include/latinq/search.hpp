#pragma once

// Exhaustive search for non-affine latin quandles of order 2^k as central
// extensions F x_{1-psi,psi,theta} A:
//   1. every abelian group A of order 2^l, 2 <= l <= k-2, with an admissible psi;
//   2. psi up to conjugacy in Aut(A);
//   3. every latin quandle F of order 2^{k-l};
//   4. a generating set of Z_LD(F, A, psi);
//   5. YES iff some generator fails (M).

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "abelian_group.hpp"
#include "cocycle_solver.hpp"
#include "library.hpp"

namespace latinq {

struct SearchOptions {
    bool long_run = false;  // required for k = 7
    unsigned jobs = 1;
    bool cross_check_lifting = true;  // non-elementary fibers only
    std::function<void(const std::string&)> progress;
};

struct SearchRecord {
    AbelianGroup2 group;
    EndoMatrix psi;
    std::size_t psi_class = 0;  // 1-based among the group's classes
    const LibraryEntry* base = nullptr;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t distinct_equations = 0;
    std::size_t generator_count = 0;
    int log2_zld = 0;
    std::optional<bool> lifting_agrees;
    std::optional<NonmedialGenerator> witness;
    std::optional<Cocycle> witness_cocycle;
    double seconds = 0;
};

struct GroupSummary {
    AbelianGroup2 group;
    std::size_t class_count = 0;  // 0: no admissible automorphism
};

struct SearchReport {
    int k = 0;
    std::vector<GroupSummary> groups;
    std::map<std::size_t, QuandleLibrary> libraries;  // keyed by order; records point into these
    std::vector<SearchRecord> records;
    double seconds = 0;

    bool verdict() const {
        for (const auto& r : records)
            if (r.witness) return true;
        return false;
    }
    std::size_t witness_count() const {
        std::size_t n = 0;
        for (const auto& r : records) n += r.witness ? 1 : 0;
        return n;
    }

    SearchReport() = default;
    SearchReport(const SearchReport&) = delete;
    SearchReport& operator=(const SearchReport&) = delete;
    SearchReport(SearchReport&&) = default;
    SearchReport& operator=(SearchReport&&) = default;
};

namespace detail {

inline void run_record(SearchRecord& rec, const SearchOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto& f = rec.base->table;
    const auto sys = assemble(f, rec.group, rec.psi);
    SolveOptions so;
    so.cross_check_lifting = opts.cross_check_lifting && !rec.group.is_elementary();
    auto sol = solve_ZLD(sys, so);
    rec.unknowns = sol.unknowns;
    rec.equations = sol.equations;
    rec.distinct_equations = sol.distinct_equations;
    rec.generator_count = sol.generators.size();
    rec.log2_zld = sol.log2_size;
    rec.lifting_agrees = sol.lifting_agrees;
    rec.witness = nonmedial_generator(f, rec.group, rec.psi, sol.generators);
    if (rec.witness) rec.witness_cocycle = sol.generators[rec.witness->index];
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

inline SearchReport search(int k, const SearchOptions& opts = {}) {
    if (k < 4 || k > 7) throw std::invalid_argument("search: k must lie in [4, 7]");
    if (k == 7 && !opts.long_run) throw std::invalid_argument("search: k = 7 requires the long-run flag");
    const auto t0 = std::chrono::steady_clock::now();
    auto note = [&](const std::string& s) {
        if (opts.progress) opts.progress(s);
    };

    SearchReport rep;
    rep.k = k;
    for (int l = 2; l <= k - 2; ++l) {
        const std::size_t base_order = std::size_t{1} << (k - l);
        if (!rep.libraries.count(base_order)) {
            rep.libraries.emplace(base_order, build_library(base_order));
            note("library order " + std::to_string(base_order) + ": " +
                 std::to_string(rep.libraries.at(base_order).members.size()) + " members");
        }
        const auto& lib = rep.libraries.at(base_order);
        for (const auto& entry : lib.members)
            if (!is_medial(entry.table)) throw std::logic_error("search: base " + entry.name + " is not medial");
        for (const auto& g : groups_of_order_log2(l)) {
            const auto reps = admissible_class_reps(g);
            rep.groups.push_back(GroupSummary{g, reps.size()});
            note("group " + g.name() + ": " + std::to_string(reps.size()) + " admissible classes");
            for (std::size_t c = 0; c < reps.size(); ++c)
                for (const auto& entry : lib.members) {
                    SearchRecord r;
                    r.group = g;
                    r.psi = reps[c];
                    r.psi_class = c + 1;
                    r.base = &entry;
                    rep.records.push_back(std::move(r));
                }
        }
    }

    const unsigned jobs = std::max(1u, opts.jobs);
    std::atomic<std::size_t> next{0};
    std::mutex note_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rep.records.size();) {
            auto& r = rep.records[i];
            try {
                detail::run_record(r, opts);
            } catch (...) {
                std::lock_guard lock(note_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
            std::lock_guard lock(note_mutex);
            note("record " + std::to_string(i + 1) + "/" + std::to_string(rep.records.size()) + " " + r.group.name() +
                 " psi#" + std::to_string(r.psi_class) + " F=" + r.base->name + (r.witness ? " witness" : " none"));
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Plain-text report; contains no timing so reruns are byte-identical.
inline void write_report(std::ostream& os, const SearchReport& rep) {
    const std::size_t order = std::size_t{1} << rep.k;
    os << "latinq search report\n";
    os << "target-order 2^" << rep.k << " = " << order << "\n";
    os << "verdict " << (rep.verdict() ? "YES" : "NO") << "\n";
    os << "records " << rep.records.size() << "\n";
    os << "witnesses " << rep.witness_count() << "\n";
    os << "assumption every latin quandle of 2-power order below 64 is affine, so each base library lists all latin "
          "quandles of its order\n";
    for (const auto& g : rep.groups)
        os << "group " << g.group.name() << " "
           << (g.class_count ? "admissible-classes " + std::to_string(g.class_count) : std::string("inadmissible")) << "\n";
    for (const auto& [ord, lib] : rep.libraries) {
        os << "library " << ord << " size " << lib.members.size() << "\n";
        for (const auto& m : lib.members)
            os << "  " << m.name << " fingerprint " << m.fingerprint << " provenance " << m.provenance() << "\n";
    }
    os << "fields: A psi-class psi F unknowns equations distinct-equations generators log2|Z_LD| lifting witness\n";
    for (const auto& r : rep.records) {
        os << "record A=" << r.group.name() << " class=" << r.psi_class << " psi=" << r.psi.to_string()
           << " F=" << r.base->name << " unknowns=" << r.unknowns << " equations=" << r.equations
           << " distinct=" << r.distinct_equations << " generators=" << r.generator_count << " log2zld=" << r.log2_zld
           << " lifting=" << (r.lifting_agrees ? (*r.lifting_agrees ? "agree" : "DISAGREE") : "n/a") << " witness=";
        if (r.witness) {
            os << "gen" << r.witness->index << "@(";
            const auto& w = r.witness->witness.where;
            for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
            os << ")";
        } else {
            os << "none";
        }
        os << "\n";
    }
}

}  // namespace latinq
