#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace logtk {

enum class Status { holds, fails, indeterminate };

inline std::string status_str(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        default: return "indeterminate";
    }
}

// Decision outcome plus a named witness record. Every `fails` carries a
// concrete witness; `indeterminate` names the budget or criterion that ran out.
struct Verdict {
    Status status = Status::indeterminate;
    nlohmann::json certificate = nlohmann::json::object();
    std::vector<std::string> preconditions_checked;

    bool ok() const { return status == Status::holds; }

    static Verdict holds(nlohmann::json cert = nlohmann::json::object()) {
        return Verdict{Status::holds, std::move(cert), {}};
    }
    static Verdict fails(nlohmann::json cert = nlohmann::json::object()) {
        return Verdict{Status::fails, std::move(cert), {}};
    }
    static Verdict indeterminate(nlohmann::json cert = nlohmann::json::object()) {
        return Verdict{Status::indeterminate, std::move(cert), {}};
    }
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace logtk
