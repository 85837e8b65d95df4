#pragma once

#include <vector>

#include "idforge/binomial.hpp"

namespace idforge {

// Streams every s-tuple of nonnegative integers summing to n, each exactly
// once, in colexicographic order (compare reversed tuples lexicographically),
// e.g. compositions of 2 into 2 parts: (2,0), (1,1), (0,2). Constant memory;
// single consumer.
class CompositionCursor {
public:
    // n >= 0 and s >= 1; s == 0 is allowed only with n == 0, where the
    // stream is the single empty tuple.
    CompositionCursor(int n, int s);

    // Returns the next tuple, or nullptr when exhausted. The pointee is
    // invalidated by the following call.
    const std::vector<int>* next();

private:
    int n_;
    int s_;
    bool done_ = false;
    bool started_ = false;
    std::vector<int> current_;
    bool advance();
};

// Streams every k with 0 <= k <= bound componentwise, in row-major order
// (last component varies fastest). Emits exactly prod(bound_i + 1) vectors.
class VecRangeCursor {
public:
    explicit VecRangeCursor(VecIndex bound);
    const VecIndex* next();

private:
    VecIndex bound_;
    VecIndex current_;
    bool done_ = false;
    bool started_ = false;
};

// Streams every s-tuple (k_1, ..., k_s) of vectors in N^m summing
// componentwise to n, realized as the cartesian product of per-component
// integer composition streams; count = prod_i C(n_i + s - 1, s - 1).
class VecCompositionCursor {
public:
    VecCompositionCursor(VecIndex n, int s);
    const std::vector<VecIndex>* next();

private:
    VecIndex n_;
    int s_;
    bool done_ = false;
    bool started_ = false;
    std::vector<std::vector<int>> rows_;  // rows_[i] = composition of n_i into s parts
    std::vector<VecIndex> current_;       // s vectors of dimension m
    bool advance_row(int i);
    void rebuild_current();
};

}  // namespace idforge
