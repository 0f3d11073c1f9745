#include "arcs/sequence_spec.hpp"

#include <stdexcept>
#include <string>

namespace arcs {

long long eval_expr(SeqExpr e, int n, int i) {
    long long num = static_cast<long long>(e.cn) * n + e.cc + static_cast<long long>(e.ci) * i;
    if (e.den == 0) throw std::logic_error("eval_expr: zero denominator");
    if (num % e.den != 0)
        throw std::logic_error("eval_expr: inexact division " + std::to_string(num) + "/" +
                               std::to_string(e.den) + " at n=" + std::to_string(n) +
                               " i=" + std::to_string(i));
    return num / e.den;
}

std::vector<Vertex> expand_sequence(const SequenceSpec& spec, int k, int n) {
    long long last = eval_expr(spec.last_index, n, 0);
    if (last < -1)
        throw std::logic_error("expand_sequence: index range ends at " + std::to_string(last));
    std::vector<Vertex> out;
    if (last >= 0) out.reserve(spec.block.size() * static_cast<std::size_t>(last + 1));
    for (long long i = 0; i <= last; ++i) {
        for (const SeqTerm& t : spec.block) {
            if (t.level < 0 || t.level >= 4)
                throw std::logic_error("expand_sequence: level out of range");
            out.push_back(Vertex::point(eval_expr(t.value, n, static_cast<int>(i)), t.level, k));
        }
    }
    return out;
}

KCycle expand_cycle(const CycleSpec& spec, int k, int n) {
    std::vector<Vertex> verts;
    if (spec.with_infinity) verts.push_back(Vertex::infinity());
    for (const SequenceSpec& s : spec.sequences) {
        std::vector<Vertex> part = expand_sequence(s, k, n);
        verts.insert(verts.end(), part.begin(), part.end());
    }
    return KCycle(std::move(verts));
}

}  // namespace arcs
