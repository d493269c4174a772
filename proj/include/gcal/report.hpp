#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gcal {

struct Counterexample {
    std::string property;
    std::string witness;
};

/// Outcome of a property checker. Violations are data, not exceptions.
struct PropertyReport {
    std::string name;
    bool hypothesis_ok = true;   // false: the checked statement is vacuous here
    std::string hypothesis_note;
    std::size_t checked = 0;     // tuples actually evaluated
    std::size_t skipped = 0;     // tuples with a value outside the known window
    bool window_certified = false;
    std::vector<Counterexample> counterexamples;

    bool passed() const { return counterexamples.empty(); }

    void fail(std::string property, std::string witness) {
        counterexamples.push_back({std::move(property), std::move(witness)});
    }

    void merge(const PropertyReport& other) {
        checked += other.checked;
        skipped += other.skipped;
        window_certified = window_certified || other.window_certified;
        if (!other.hypothesis_ok) {
            hypothesis_ok = false;
            if (!hypothesis_note.empty()) hypothesis_note += "; ";
            hypothesis_note += other.hypothesis_note;
        }
        counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                               other.counterexamples.end());
    }
};

}  // namespace gcal
