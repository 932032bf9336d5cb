#include "ordinary/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include <omp.h>

namespace ordinary {

namespace {
std::atomic<int> g_default_threads{1};
}

void set_default_threads(int n) { g_default_threads.store(n < 1 ? 1 : n); }
int default_threads() { return g_default_threads.load(); }

Triple normalize_triple(Triple v) {
    Int g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
    if (sgn(g) == 0) fail(Err::ZeroVector, "zero coordinate triple");
    if (g != 1) {
        for (auto& c : v) c /= g;
    }
    for (const auto& c : v) {
        int s = sgn(c);
        if (s > 0) break;
        if (s < 0) {
            for (auto& d : v) d = -d;
            break;
        }
    }
    return v;
}

int compare_triples(const Triple& a, const Triple& b) {
    for (int i = 0; i < 3; ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

ProjPoint ProjPoint::from_rationals(const Rat& x, const Rat& y, const Rat& z) {
    Int l = lcm(lcm(x.get_den(), y.get_den()), z.get_den());
    Rat rx = x * l, ry = y * l, rz = z * l;
    return from_ints(rx.get_num(), ry.get_num(), rz.get_num());
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "(" << v[0] << " : " << v[1] << " : " << v[2] << ")";
    return os.str();
}

std::string ProjLine::str() const {
    std::ostringstream os;
    os << "[" << v[0] << " : " << v[1] << " : " << v[2] << "]";
    return os.str();
}

namespace {
Triple cross(const Triple& a, const Triple& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
} // namespace

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) fail(Err::EqualPoints, "join of equal points " + p.str());
    return ProjLine{normalize_triple(cross(p.v, q.v))};
}

ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) fail(Err::EqualLines, "meet of equal lines " + l1.str());
    return ProjPoint{normalize_triple(cross(l1.v, l2.v))};
}

bool incident(const ProjPoint& p, const ProjLine& l) {
    Int d = p.v[0] * l.v[0] + p.v[1] * l.v[1] + p.v[2] * l.v[2];
    return sgn(d) == 0;
}

bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    if (p == q || p == r || q == r) return true;
    return incident(r, join(p, q));
}

std::pair<ProjPoint, ProjPoint> line_basis_points(const ProjLine& l) {
    const Int& a = l.v[0];
    const Int& b = l.v[1];
    const Int& c = l.v[2];
    Triple u, w;
    if (sgn(a) != 0) {
        u = {-b, a, 0};
        w = {-c, Int(0), a};
    } else if (sgn(b) != 0) {
        u = {1, 0, 0};
        w = {0, -c, b};
    } else {
        u = {1, 0, 0};
        w = {0, 1, 0};
    }
    ProjPoint P{normalize_triple(u)}, Q{normalize_triple(w)};
    if (Q < P) std::swap(P, Q);
    return {P, Q};
}

PointSet::PointSet(std::vector<ProjPoint> pts) : pts_(std::move(pts)) {
    order_.resize(pts_.size());
    for (size_t i = 0; i < pts_.size(); ++i) order_[i] = static_cast<int>(i);
    std::sort(order_.begin(), order_.end(),
              [&](int i, int j) { return pts_[static_cast<size_t>(i)] < pts_[static_cast<size_t>(j)]; });
    for (size_t i = 1; i < order_.size(); ++i) {
        if (pts_[static_cast<size_t>(order_[i - 1])] == pts_[static_cast<size_t>(order_[i])])
            fail(Err::DuplicatePoint,
                 "duplicate point " + pts_[static_cast<size_t>(order_[i])].str());
    }
}

int PointSet::index_of(const ProjPoint& p) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), p, [&](int i, const ProjPoint& q) {
        return pts_[static_cast<size_t>(i)] < q;
    });
    if (it == order_.end()) return -1;
    return pts_[static_cast<size_t>(*it)] == p ? *it : -1;
}

bool PointSet::contains(const ProjPoint& p) const { return index_of(p) >= 0; }

PointSet PointSet::subset(const std::vector<int>& indices) const {
    std::vector<ProjPoint> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(pts_[static_cast<size_t>(i)]);
    return PointSet(std::move(out));
}

std::pair<PointSet, std::vector<int>> PointSet::complement(const std::vector<int>& indices) const {
    std::vector<char> drop(pts_.size(), 0);
    for (int i : indices) drop[static_cast<size_t>(i)] = 1;
    std::vector<ProjPoint> out;
    std::vector<int> back;
    for (size_t i = 0; i < pts_.size(); ++i) {
        if (!drop[i]) {
            out.push_back(pts_[i]);
            back.push_back(static_cast<int>(i));
        }
    }
    return {PointSet(std::move(out)), back};
}

namespace {

std::vector<SpannedLine> group_pairs(std::vector<std::pair<ProjLine, std::pair<int, int>>>& raw) {
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        int c = compare_triples(a.first.v, b.first.v);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    std::vector<SpannedLine> out;
    size_t i = 0;
    while (i < raw.size()) {
        size_t j = i;
        std::vector<int> idx;
        while (j < raw.size() && raw[j].first == raw[i].first) {
            idx.push_back(raw[j].second.first);
            idx.push_back(raw[j].second.second);
            ++j;
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        out.push_back(SpannedLine{raw[i].first, std::move(idx)});
        i = j;
    }
    return out;
}

} // namespace

std::vector<SpannedLine> lines_spanned_serial(const PointSet& S) {
    if (S.size() < 2) fail(Err::TooFewPoints, "lines_spanned needs at least two points");
    std::vector<std::pair<ProjLine, std::pair<int, int>>> raw;
    raw.reserve(static_cast<size_t>(S.size()) * static_cast<size_t>(S.size() - 1) / 2);
    for (int i = 0; i < S.size(); ++i)
        for (int j = i + 1; j < S.size(); ++j)
            raw.emplace_back(join(S[i], S[j]), std::make_pair(i, j));
    return group_pairs(raw);
}

std::vector<SpannedLine> lines_spanned(const PointSet& S, int threads) {
    if (threads == 0) threads = default_threads();
    if (threads <= 1) return lines_spanned_serial(S);
    if (S.size() < 2) fail(Err::TooFewPoints, "lines_spanned needs at least two points");

    const int n = S.size();
    std::vector<std::vector<std::pair<ProjLine, std::pair<int, int>>>> local(
        static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
        auto& mine = local[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n; ++j) mine.emplace_back(join(S[i], S[j]), std::make_pair(i, j));
    }
    std::vector<std::pair<ProjLine, std::pair<int, int>>> raw;
    for (auto& v : local)
        for (auto& e : v) raw.push_back(std::move(e));
    return group_pairs(raw);
}

std::optional<ProjPoint> common_point(const std::vector<ProjLine>& lines) {
    if (lines.size() < 2) fail(Err::TooFewLines, "common_point needs at least two lines");
    size_t second = 1;
    while (second < lines.size() && lines[second] == lines[0]) ++second;
    if (second == lines.size()) fail(Err::TooFewLines, "common_point needs two distinct lines");
    ProjPoint z = meet(lines[0], lines[second]);
    for (const auto& l : lines)
        if (!incident(z, l)) return std::nullopt;
    return z;
}

std::pair<int, ProjLine> max_collinear(const PointSet& S, int threads) {
    auto spanned = lines_spanned(S, threads);
    const SpannedLine* best = &spanned.front();
    for (const auto& sl : spanned)
        if (sl.pts.size() > best->pts.size()) best = &sl;
    return {static_cast<int>(best->pts.size()), best->line};
}

} // namespace ordinary
