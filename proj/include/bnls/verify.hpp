#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bnls::verify {

struct Item {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst measured error / quantity of interest
    double threshold = 0.0;  // pass bound
    std::string details;
};

struct Options {
    unsigned long long seed = 12345;
    std::size_t ensemble = 6;
    bool with_ratio_suite = true;  // the expensive item
};

// Runs the closed-form identity suite; on_item streams results as they
// finish. Returns all items, each with pass/fail and the measured error.
std::vector<Item> run_all(const Options& opts,
                          const std::function<void(const Item&)>& on_item = {});

bool all_pass(const std::vector<Item>& items);

}  // namespace bnls::verify
