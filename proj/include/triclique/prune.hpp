#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triclique/triangles.hpp"

namespace triclique {

/// Work done by a trace or an extraction, for rough cost reporting.
struct OpCounters {
    std::uint64_t iterations = 0;
    std::uint64_t triangle_visits = 0;
    std::uint64_t weight_updates = 0;

    OpCounters& operator+=(const OpCounters& o)
    {
        iterations += o.iterations;
        triangle_visits += o.triangle_visits;
        weight_updates += o.weight_updates;
        return *this;
    }
};

/// One round of the removal process. Indices are 0-based.
struct IterationRecord {
    std::size_t index = 0;
    TriangleSet surviving;            // C_i
    WeightVector weights;             // P_i over C_i
    std::uint32_t min = 0;            // zeros excluded
    std::uint32_t max = 0;
    TriangleSet removed;              // Q_i
    std::vector<EdgeId> min_edges;    // edges of weight MIN_i, ascending
};

enum class TraceMode {
    Exhaustive,  // run until no triangle survives, then take argmax MIN
    EarlyStop,   // stop at the first iteration with MIN == MAX
};

struct TraceOptions {
    TraceMode mode = TraceMode::Exhaustive;
    bool differential = false;  // maintain P_i by decrements instead of recounting
};

struct Trace {
    std::vector<IterationRecord> iterations;
    std::optional<std::size_t> main_index;
    bool stopped_early = false;
    OpCounters counters;

    bool empty() const { return iterations.empty(); }
};

struct StepResult {
    IterationRecord record;
    TriangleSet next;
};

/// One removal round on the surviving set. Throws EmptyTriangleSet on an empty set.
StepResult prune_step(const TriangleIndex& index, const TriangleSet& surviving, std::size_t iteration = 0);
StepResult prune_step(const Graph& g, const TriangleSet& surviving);

Trace full_trace(const TriangleIndex& index, const TraceOptions& options = {});
Trace full_trace(const Graph& g, const TraceOptions& options = {});

/// Argmax of MIN_i over the records, earliest on ties.
std::optional<std::size_t> select_main_index(const std::vector<IterationRecord>& iterations);

/// Throws EmptyTrace when the graph had no triangles.
const IterationRecord& main_iteration(const Trace& t);

std::string to_string(TraceMode mode);
TraceMode parse_trace_mode(const std::string& text);

} // namespace triclique
