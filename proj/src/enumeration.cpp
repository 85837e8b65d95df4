#include "idforge/enumeration.hpp"

#include <numeric>

#include "idforge/errors.hpp"

namespace idforge {

CompositionCursor::CompositionCursor(int n, int s) : n_(n), s_(s) {
    if (n < 0) throw ContractViolation("compositions: n must be nonnegative");
    if (s < 0) throw ContractViolation("compositions: s must be nonnegative");
    if (s == 0 && n > 0)
        throw ContractViolation("compositions: an empty sum cannot reach n > 0");
    // Colex order starts at (n, 0, ..., 0).
    current_.assign(s_, 0);
    if (s_ > 0) current_[0] = n_;
}

// Colex successor: increment the leftmost position p >= 1 whose increment
// can be funded by the mass sitting strictly left of it; the freed mass
// minus one refills position 0.
bool CompositionCursor::advance() {
    int left_mass = current_[0];
    for (int p = 1; p < s_; ++p) {
        if (left_mass > 0) {
            ++current_[p];
            for (int i = 1; i < p; ++i) current_[i] = 0;
            current_[0] = left_mass - 1;
            return true;
        }
        left_mass += current_[p];
    }
    return false;
}

const std::vector<int>* CompositionCursor::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        return &current_;
    }
    if (s_ == 0 || !advance()) {
        done_ = true;
        return nullptr;
    }
    return &current_;
}

VecRangeCursor::VecRangeCursor(VecIndex bound) : bound_(std::move(bound)) {
    if (!bound_.all_nonnegative())
        throw ContractViolation("vec_range: negative component in " + bound_.str());
    current_.c.assign(bound_.c.size(), 0);
}

const VecIndex* VecRangeCursor::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        return &current_;
    }
    for (int i = bound_.dim() - 1; i >= 0; --i) {
        if (current_.c[i] < bound_.c[i]) {
            ++current_.c[i];
            for (int j = i + 1; j < bound_.dim(); ++j) current_.c[j] = 0;
            return &current_;
        }
    }
    done_ = true;
    return nullptr;
}

VecCompositionCursor::VecCompositionCursor(VecIndex n, int s) : n_(std::move(n)), s_(s) {
    if (!n_.all_nonnegative())
        throw ContractViolation("vec_compositions: negative component in " + n_.str());
    if (s < 1) throw ContractViolation("vec_compositions: s must be >= 1");
    rows_.resize(n_.dim());
    for (int i = 0; i < n_.dim(); ++i) {
        rows_[i].assign(s_, 0);
        rows_[i][0] = n_.c[i];
    }
    current_.assign(s_, VecIndex(std::vector<int>(n_.dim(), 0)));
    rebuild_current();
}

// Advances row i to its colex successor; false when the row wraps around.
bool VecCompositionCursor::advance_row(int i) {
    auto& row = rows_[i];
    int left_mass = row[0];
    for (int p = 1; p < s_; ++p) {
        if (left_mass > 0) {
            ++row[p];
            for (int j = 1; j < p; ++j) row[j] = 0;
            row[0] = left_mass - 1;
            return true;
        }
        left_mass += row[p];
    }
    // Wrap back to the first composition of this row.
    row.assign(s_, 0);
    row[0] = n_.c[i];
    return false;
}

void VecCompositionCursor::rebuild_current() {
    for (int j = 0; j < s_; ++j)
        for (int i = 0; i < n_.dim(); ++i) current_[j].c[i] = rows_[i][j];
}

const std::vector<VecIndex>* VecCompositionCursor::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        return &current_;
    }
    // Odometer over rows, last component fastest; single-part rows only ever
    // hold one composition.
    for (int i = n_.dim() - 1; i >= 0; --i) {
        if (advance_row(i)) {
            rebuild_current();
            return &current_;
        }
    }
    done_ = true;
    return nullptr;
}

}  // namespace idforge
