#pragma once

// Error types thrown by the rzk library.  Two families matter to callers:
// input_error (rejected problem data, CLI exit code 2) and resource_error
// (a configured cap was exceeded, CLI exit code 3).

#include <stdexcept>
#include <string>

namespace rzk {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// The problem itself is invalid; retrying with the same input cannot succeed.
struct input_error : error {
    using error::error;
};

// The computation would exceed a size cap; a larger cap may succeed.
struct resource_error : error {
    using error::error;
};

struct ghost_vertex_error : input_error {
    int vertex;
    explicit ghost_vertex_error(int v)
        : input_error("vertex " + std::to_string(v) +
                      " belongs to no facet (ghost vertex)"),
          vertex(v) {}
};

struct vertex_out_of_range_error : input_error {
    int vertex;
    int width;
    vertex_out_of_range_error(int v, int m)
        : input_error("vertex " + std::to_string(v) + " outside 1.." +
                      std::to_string(m)),
          vertex(v), width(m) {}
};

struct width_mismatch_error : input_error {
    width_mismatch_error(int lhs, int rhs)
        : input_error("width mismatch: " + std::to_string(lhs) + " vs " +
                      std::to_string(rhs)) {}
};

struct empty_index_set_error : input_error {
    empty_index_set_error() : input_error("index set must be non-empty") {}
};

struct trivial_group_error : input_error {
    trivial_group_error() : input_error("group has rank 0") {}
};

struct not_a_free_pair_error : input_error {
    not_a_free_pair_error(const std::string& step)
        : input_error("collapse step is not a free pair here: " + step) {}
};

struct vertex_not_in_support_error : input_error {
    int vertex;
    explicit vertex_not_in_support_error(int v)
        : input_error("vertex " + std::to_string(v) +
                      " is not in the support of the group"),
          vertex(v) {}
};

struct malformed_input_error : input_error {
    explicit malformed_input_error(const std::string& detail)
        : input_error("malformed input: " + detail) {}
};

struct rank_too_large_error : resource_error {
    int rank;
    int cap;
    rank_too_large_error(int r, int c)
        : resource_error("group rank " + std::to_string(r) +
                         " exceeds enumeration cap " + std::to_string(c)),
          rank(r), cap(c) {}
};

struct too_many_cells_error : resource_error {
    unsigned long long count;
    unsigned long long cap;
    too_many_cells_error(unsigned long long n, unsigned long long c)
        : resource_error("cell count " + std::to_string(n) +
                         " exceeds cap " + std::to_string(c)),
          count(n), cap(c) {}
};

struct too_many_faces_error : resource_error {
    unsigned long long count;
    unsigned long long cap;
    too_many_faces_error(unsigned long long n, unsigned long long c)
        : resource_error("face enumeration would touch " + std::to_string(n) +
                         " subsets, cap is " + std::to_string(c)),
          count(n), cap(c) {}
};

// CLI exit codes.  0 is success; 1 is reserved for failed property suites.
inline int exit_code_for(const error& e) {
    if (dynamic_cast<const resource_error*>(&e) != nullptr) return 3;
    return 2;
}

}  // namespace rzk
