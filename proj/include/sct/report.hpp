#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace sct {

enum class CheckStatus { pass, fail, info };

/// One verified (or merely noted) fact. `anchor` states the mathematical
/// claim being checked; `witness` carries the concrete numbers behind the
/// verdict.
struct ReportEntry {
    std::string id;
    std::string anchor;
    CheckStatus status = CheckStatus::info;
    std::string witness;
};

struct Report {
    std::string title;
    std::vector<ReportEntry> entries;

    void add(std::string id, std::string anchor, bool ok, std::string witness = "") {
        entries.push_back({std::move(id), std::move(anchor),
                           ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness)});
    }
    void note(std::string id, std::string anchor, std::string witness = "") {
        entries.push_back({std::move(id), std::move(anchor), CheckStatus::info,
                           std::move(witness)});
    }

    int failures() const {
        int k = 0;
        for (const auto& e : entries)
            if (e.status == CheckStatus::fail) k++;
        return k;
    }
    int checks() const {
        int k = 0;
        for (const auto& e : entries)
            if (e.status != CheckStatus::info) k++;
        return k;
    }
    bool all_passed() const { return failures() == 0; }

    /// Fixed-width plain-text rendering, one entry per line.
    std::string text() const {
        std::ostringstream out;
        out << title << "\n";
        for (const auto& e : entries) {
            const char* tag = e.status == CheckStatus::pass   ? "PASS"
                              : e.status == CheckStatus::fail ? "FAIL"
                                                              : "INFO";
            out << tag << "  " << e.id << "  " << e.anchor;
            if (!e.witness.empty()) out << "  [" << e.witness << "]";
            out << "\n";
        }
        out << checks() << " checks, " << failures() << " failures\n";
        return out.str();
    }
};

}  // namespace sct
