#pragma once

#include "logtk/manifest.hpp"
#include "logtk/regcheck.hpp"

namespace logtk {

struct RunOptions {
    RegcheckOptions check;
    bool json = false;
};

struct Report {
    std::string task;
    std::string procedure;
    Status status = Status::indeterminate;
    nlohmann::json certificate;
    std::vector<std::string> preconditions;
    nlohmann::json stats = nlohmann::json::object();
    double ms = 0.0;
    std::string error; // precondition / engine failure text

    int exit_code() const {
        if (!error.empty()) return 2;
        switch (status) {
            case Status::holds: return 0;
            case Status::fails: return 1;
            default: return 2;
        }
    }

    nlohmann::json to_json() const;
    std::string human() const;
};

// Execute the selected tasks (all when selector is empty; a task id or a
// procedure name otherwise) in declaration order.
std::vector<Report> run_tasks(const Manifest& m, const std::string& selector,
                              const RunOptions& opt);

int reports_exit_code(const std::vector<Report>& reports);

} // namespace logtk
