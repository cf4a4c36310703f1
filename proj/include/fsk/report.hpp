#pragma once

#include <string>
#include <vector>

namespace fsk {

enum class Status { pass, fail, skipped };

struct VerifyReport {
    std::string name;
    Status status = Status::pass;
    std::vector<std::string> details;
    double seconds = 0.0;

    bool ok() const { return status == Status::pass; }
    void fail(std::string why)
    {
        status = Status::fail;
        details.push_back(std::move(why));
    }
    void merge(const VerifyReport& o)
    {
        if (o.status == Status::fail) status = Status::fail;
        for (const auto& d : o.details) details.push_back(o.name + ": " + d);
    }
};

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skipped";
    }
}

}  // namespace fsk
