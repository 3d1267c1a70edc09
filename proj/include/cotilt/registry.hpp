// The worked examples, embedded with their expected outputs.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cotilt/report.hpp"

namespace cotilt {

class Checker {
public:
    explicit Checker(std::uint64_t seed = 0) : seed_(seed) {}
    std::uint64_t seed() const { return seed_; }

    void equal(const std::string& name, const std::string& expected, const std::string& computed);
    void truth(const std::string& name, bool expected, bool computed);
    void iso(const std::string& name, const FinModule& expected, const FinModule& computed);
    void info(const std::string& name, const std::string& value);
    bool ok() const;
    void emit(Report& r) const;

private:
    struct Line {
        std::string name, expected, computed;
        bool ok;
        bool info;
    };
    std::uint64_t seed_;
    std::vector<Line> lines_;
};

struct ExampleSetup {
    AlgebraPtr alg;
    std::shared_ptr<DualityContext> ctx;
};

struct ExampleRecord {
    std::string id;
    std::string title;
    std::string algebra;  // algebra file text
    std::string u;        // module expression for U
    std::vector<std::string> s_names;
    std::string module;   // default module, may be empty
    std::string complex;  // default complex file text, may be empty
    std::function<void(const ExampleSetup&, Checker&)> run;
};

const std::vector<ExampleRecord>& registry();
const ExampleRecord& find_example(const std::string& id);
ExampleSetup setup_example(const ExampleRecord& e, int cap = 10);
// Runs the checks of one record; false if any fails.
bool run_example(const ExampleRecord& e, Report& r, std::uint64_t seed = 0, int cap = 10);

}  // namespace cotilt
