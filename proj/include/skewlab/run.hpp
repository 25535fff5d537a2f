#pragma once

#include <future>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace skewlab {

enum class Format { Human, Machine };

struct RunOptions {
    Format format = Format::Human;
    std::uint64_t seed = 0;
    std::uint64_t budget = 50'000'000;
    bool parallel = false;
    int catalog_degree = 2;
    int catalog_trunc = 3;
};

namespace detail {

struct Row {
    std::string task;
    std::string item;    // property or theorem id
    std::string status;  // Holds/Fails/VerifiedUpToBound/Confirmed/HypothesisNotMet/VIOLATION/...
    std::string bounds;  // "D=2;N=3" or "-"
    std::string witness; // single line, '-' when absent
    bool bad = false;    // drives the exit code
};

inline std::string sanitize(std::string s) {
    for (auto& c : s)
        if (c == '\t' || c == '\n') c = ' ';
    return s.empty() ? "-" : s;
}

inline void emit(std::ostream& out, Format fmt, const Row& row) {
    if (fmt == Format::Machine) {
        out << "RESULT\t" << row.task << "\t" << row.item << "\t" << row.status << "\t" << row.bounds
            << "\t" << sanitize(row.witness) << "\n";
    } else {
        out << "  " << row.item << ": " << row.status;
        if (row.bounds != "-") out << " [" << row.bounds << "]";
        if (!row.witness.empty() && row.witness != "-") out << "\n      " << row.witness;
        out << "\n";
    }
}

struct TaskOutput {
    std::string text;
    bool bad = false;
};

inline TaskOutput run_check(const ConfigDocument& doc, const Task& task, const CheckTask& t,
                            const RunOptions& opt) {
    std::ostringstream os;
    const Ring& R = *doc.rings.at(t.ring);
    const Endomorphism* s = t.endo == "-" ? nullptr : doc.endos.at(t.endo).get();
    DeciderOptions dopt;
    dopt.budget = opt.budget;
    dopt.seed = opt.seed;
    if (t.degree) dopt.degree = *t.degree;

    if (opt.format == Format::Human) {
        os << task.label << " on " << R.name() << "\n";
        if (s && s->is_identity()) os << "  note: sigma is the identity (baseline comparison)\n";
    }
    Verdict v = decide(t.property, R, s, dopt);
    Row row{task.label, v.property, to_string(v.status), v.bounds.render(),
            v.witness ? v.witness->text : "-", false};
    bool failed = v.status == Status::Fails;
    row.bad = t.expect_fails ? !failed : failed;
    if (t.expect_fails && opt.format == Format::Human)
        os << "  (failure expected: " << (failed ? "satisfied" : "NOT satisfied") << ")\n";
    emit(os, opt.format, row);
    return {os.str(), row.bad};
}

inline TaskOutput run_verify(const ConfigDocument& doc, const Task& task, const VerifyTask& t,
                             const RunOptions& opt) {
    std::ostringstream os;
    CatalogEntry entry;
    entry.name = t.ring + (t.endo == "-" ? "" : "/" + t.endo);
    entry.ring = doc.rings.at(t.ring);
    entry.endo = t.endo == "-" ? Endomorphism::identity(entry.ring) : doc.endos.at(t.endo);
    TheoremBounds bounds;
    bounds.degree = t.degree;
    bounds.trunc = t.trunc;
    bounds.decider.budget = opt.budget;
    bounds.decider.seed = opt.seed;

    if (opt.format == Format::Human) {
        os << task.label << " on " << entry.ring->name() << " with " << entry.endo->name() << "\n";
        if (t.endo == "-") os << "  note: no endomorphism given; using the identity\n";
    }
    bool bad = false;
    for (auto& id : t.theorems) {
        TheoremReport rep = verify_theorem(id, entry, bounds);
        Row row{task.label, id, to_string(rep.status), rep.bounds.render(), sanitize(rep.note), false};
        row.bad = rep.status == TheoremStatus::Violation;
        bad = bad || row.bad;
        emit(os, opt.format, row);
        if (opt.format == Format::Human) {
            for (auto& h : rep.hypotheses) os << "      hypothesis " << h << "\n";
            for (auto& c : rep.conclusions) os << "      " << c << "\n";
        }
    }
    return {os.str(), bad};
}

inline TaskOutput run_search(const Task& task, const SearchTask& t, const RunOptions& opt) {
    std::ostringstream os;
    SearchCaps caps;
    caps.max_order = t.max_order;
    caps.decider.budget = opt.budget;
    caps.decider.seed = opt.seed;
    if (opt.format == Format::Human)
        os << task.label << " over rings of order <= " << t.max_order << "\n";
    auto hits = search_counterexamples(t.p, t.q, caps);
    for (auto& h : hits) {
        Row row{task.label, property_id(t.q), "Found", "-",
                "ring=" + h.ring + " endo=" + h.endo + " " +
                    (h.q_verdict.witness ? h.q_verdict.witness->text : ""),
                false};
        emit(os, opt.format, row);
    }
    if (hits.empty()) {
        Row row{task.label, property_id(t.q), "NoneFound", "-", "-", false};
        emit(os, opt.format, row);
    }
    return {os.str(), false};
}

inline TaskOutput run_task(const ConfigDocument& doc, const Task& task, const RunOptions& opt) {
    if (auto* c = std::get_if<CheckTask>(&task.body)) return run_check(doc, task, *c, opt);
    if (auto* v = std::get_if<VerifyTask>(&task.body)) return run_verify(doc, task, *v, opt);
    return run_search(task, std::get<SearchTask>(task.body), opt);
}

}  // namespace detail

// Executes the document's tasks in declaration order. Exit code 0 when every
// row is Holds/VerifiedUpToBound/Confirmed/HypothesisNotMet/Found (with
// expect=fails inverting its own task), 1 when anything fails or violates.
// Config and capacity problems escape as exceptions; the CLI maps them to 2.
inline int run(const ConfigDocument& doc, const RunOptions& opt, std::ostream& out) {
    bool bad = false;
    if (opt.parallel) {
        std::vector<std::future<detail::TaskOutput>> futures;
        futures.reserve(doc.tasks.size());
        for (auto& task : doc.tasks)
            futures.push_back(std::async(std::launch::async, [&doc, &task, &opt] {
                return detail::run_task(doc, task, opt);
            }));
        for (auto& f : futures) {
            auto r = f.get();
            out << r.text;
            bad = bad || r.bad;
        }
    } else {
        for (auto& task : doc.tasks) {
            auto r = detail::run_task(doc, task, opt);
            out << r.text;
            bad = bad || r.bad;
        }
    }
    return bad ? 1 : 0;
}

// Built-in catalog: every theorem on every entry, then the truncation caveat.
inline int run_catalog(const RunOptions& opt, std::ostream& out) {
    DeciderOptions dopt;
    dopt.budget = opt.budget;
    dopt.seed = opt.seed;
    auto catalog = load_catalog(dopt);
    TheoremBounds bounds;
    bounds.degree = opt.catalog_degree;
    bounds.trunc = opt.catalog_trunc;
    bounds.decider = dopt;

    bool bad = false;
    for (auto& entry : catalog) {
        if (opt.format == Format::Human)
            out << "catalog entry " << entry.name << " (" << entry.ring->name() << ", "
                << entry.endo->name() << "): " << entry.note << "\n";
        for (auto& id : theorem_ids()) {
            TheoremReport rep = verify_theorem(id, entry, bounds);
            detail::Row row{"catalog(" + entry.name + ")", id, to_string(rep.status),
                            rep.bounds.render(), detail::sanitize(rep.note), false};
            row.bad = rep.status == TheoremStatus::Violation;
            bad = bad || row.bad;
            detail::emit(out, opt.format, row);
        }
    }

    auto caveat = truncation_caveat_check();
    detail::Row row{"catalog(truncation-caveat)", "truncation_caveat", caveat.ok ? "Confirmed" : "VIOLATION",
                    "-", detail::sanitize(caveat.lines.empty() ? "-" : caveat.lines.back()), !caveat.ok};
    bad = bad || !caveat.ok;
    if (opt.format == Format::Human) {
        out << "truncation caveat:\n";
        for (auto& l : caveat.lines) out << "  " << l << "\n";
    } else {
        detail::emit(out, opt.format, row);
    }
    return bad ? 1 : 0;
}

}  // namespace skewlab
