#include "triclique/prune.hpp"

namespace triclique {
namespace {

// Fills MIN/MAX, the min-weight edges and Q_i for a record whose surviving set
// and weights are already set.
TriangleSet finish_record(const TriangleIndex& index, IterationRecord& r, OpCounters& ops)
{
    const auto mm = min_max(r.weights);
    r.min = mm.min;
    r.max = mm.max;

    r.removed = index.none();
    for (std::size_t j = 0; j < r.weights.counts.size(); ++j) {
        if (r.weights.counts[j] != r.min)
            continue;
        const auto e = static_cast<EdgeId>(j + 1);
        r.min_edges.push_back(e);
        for (TriangleId t : index.through_edge(e)) {
            ++ops.triangle_visits;
            if (r.surviving.contains(t))
                r.removed.insert(t);
        }
    }
    return r.surviving - r.removed;
}

} // namespace

StepResult prune_step(const TriangleIndex& index, const TriangleSet& surviving, std::size_t iteration)
{
    if (surviving.empty())
        throw Error(ErrorCode::EmptyTriangleSet, "prune step needs at least one surviving triangle");
    if (surviving.capacity() != index.size())
        throw Error(ErrorCode::InvalidParameter, "triangle set does not belong to this graph");

    OpCounters ops;
    StepResult out;
    out.record.index = iteration;
    out.record.surviving = surviving;
    out.record.weights = index.edge_weights(surviving);
    out.next = finish_record(index, out.record, ops);
    return out;
}

StepResult prune_step(const Graph& g, const TriangleSet& surviving)
{
    return prune_step(TriangleIndex(g), surviving);
}

Trace full_trace(const TriangleIndex& index, const TraceOptions& options)
{
    Trace trace;
    auto surviving = index.all();
    WeightVector weights = index.edge_weights(surviving);
    trace.counters.weight_updates += 3 * index.size();

    for (std::size_t i = 0; !surviving.empty(); ++i) {
        IterationRecord r;
        r.index = i;
        r.surviving = surviving;
        if (options.differential || i == 0) {
            r.weights = weights;
        } else {
            r.weights = index.edge_weights(surviving);
            trace.counters.weight_updates += 3 * surviving.size();
        }
        auto next = finish_record(index, r, trace.counters);
        ++trace.counters.iterations;

        if (options.differential) {
            r.removed.for_each([&](TriangleId t) {
                for (EdgeId e : index.triangle(t).edges)
                    --weights.counts[e - 1];
                trace.counters.weight_updates += 3;
            });
        }

        const bool stop = options.mode == TraceMode::EarlyStop && r.min == r.max;
        trace.iterations.push_back(std::move(r));
        surviving = std::move(next);
        if (stop) {
            trace.stopped_early = true;
            break;
        }
    }
    trace.main_index = select_main_index(trace.iterations);
    return trace;
}

Trace full_trace(const Graph& g, const TraceOptions& options)
{
    return full_trace(TriangleIndex(g), options);
}

std::optional<std::size_t> select_main_index(const std::vector<IterationRecord>& iterations)
{
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < iterations.size(); ++i)
        if (!best || iterations[i].min > iterations[*best].min)
            best = i;
    return best;
}

const IterationRecord& main_iteration(const Trace& t)
{
    if (!t.main_index)
        throw Error(ErrorCode::EmptyTrace, "trace has no iterations (graph has no triangles)");
    return t.iterations[*t.main_index];
}

std::string to_string(TraceMode mode)
{
    return mode == TraceMode::EarlyStop ? "early-stop" : "exhaustive";
}

TraceMode parse_trace_mode(const std::string& text)
{
    if (text == "exhaustive")
        return TraceMode::Exhaustive;
    if (text == "early-stop")
        return TraceMode::EarlyStop;
    throw Error(ErrorCode::InvalidParameter, "unknown trace mode '" + text + "'");
}

} // namespace triclique
