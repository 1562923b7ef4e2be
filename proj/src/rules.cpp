#include "rules.hpp"

#include "errors.hpp"
#include "rules_differential.hpp"
#include "rules_harmless.hpp"
#include "rules_knb.hpp"
#include "rules_nonblocker.hpp"

namespace gdr {

std::vector<std::unique_ptr<rule>> rules_for(problem_kind kind, int k) {
    switch (kind) {
        case problem_kind::nonblocker: return nonblocker_rules();
        case problem_kind::harmless: return harmless_rules();
        case problem_kind::differential: return differential_rules();
        case problem_kind::knonblocker: return knb_rules(k);
    }
    throw structural_error("unknown problem kind");
}

std::vector<std::unique_ptr<rule>> all_rules(int k) {
    std::vector<std::unique_ptr<rule>> out;
    for (auto kind : {problem_kind::nonblocker, problem_kind::harmless,
                      problem_kind::differential, problem_kind::knonblocker}) {
        auto part = rules_for(kind, kind == problem_kind::knonblocker ? k : 0);
        for (auto& r : part) out.push_back(std::move(r));
    }
    return out;
}

std::vector<const rule*> rule_pointers(const std::vector<std::unique_ptr<rule>>& rules) {
    std::vector<const rule*> out;
    out.reserve(rules.size());
    for (const auto& r : rules) out.push_back(r.get());
    return out;
}

const rule* find_rule(const std::vector<std::unique_ptr<rule>>& rules, const std::string& id) {
    for (const auto& r : rules)
        if (r->id() == id) return r.get();
    return nullptr;
}

} // namespace gdr
