#include "ktlift/ktypesum.hpp"

#include <sstream>

#include "ktlift/errors.hpp"

namespace ktlift {

int KTuple::total_size() const {
    int s = 0;
    for (const auto& l : labels) s += part_size(l.lam);
    return s;
}

std::string KTuple::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) os << "⊠";
        os << labels[i].to_string();
    }
    return os.str();
}

void KTypeSum::add(KTuple t, std::int64_t mult) {
    if (mult == 0) return;
    if (mult < 0) fail(ErrKind::InvalidParams, "negative multiplicity");
    terms[std::move(t)] += mult;
}

void KTypeSum::add_scaled(const KTypeSum& other, std::int64_t mult) {
    for (const auto& [t, m] : other.terms) add(t, m * mult);
}

std::int64_t KTypeSum::mult_of(const KTuple& t) const {
    auto it = terms.find(t);
    return it == terms.end() ? 0 : it->second;
}

std::int64_t KTypeSum::total_dim() const {
    std::int64_t sum = 0;
    for (const auto& [t, m] : terms) {
        std::int64_t d = m;
        for (const auto& l : t.labels) d *= o_dim(l);
        sum += d;
    }
    return sum;
}

KTypeSum KTypeSum::twist_slot(int slot) const {
    KTypeSum out;
    out.cutoff = cutoff;
    for (const auto& [t, m] : terms) {
        KTuple tt = t;
        tt.labels.at(slot) = det_twist(tt.labels.at(slot));
        out.add(std::move(tt), m);
    }
    return out;
}

KTypeSum KTypeSum::outer(const KTypeSum& a, const KTypeSum& b) {
    KTypeSum out;
    for (const auto& [ta, ma] : a.terms)
        for (const auto& [tb, mb] : b.terms) {
            KTuple t = ta;
            t.labels.insert(t.labels.end(), tb.labels.begin(), tb.labels.end());
            out.add(std::move(t), ma * mb);
        }
    return out;
}

std::string KTypeSum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, m] : terms) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        os << t.to_string();
    }
    if (first) os << "0";
    return os.str();
}

bool contained_in(const KTypeSum& a, const KTypeSum& b) {
    for (const auto& [t, m] : a.terms)
        if (b.mult_of(t) < m) return false;
    return true;
}

std::vector<std::string> diff_sums(const KTypeSum& a, const KTypeSum& b) {
    std::vector<std::string> out;
    for (const auto& [t, m] : a.terms) {
        std::int64_t mb = b.mult_of(t);
        if (mb != m)
            out.push_back(t.to_string() + ": " + std::to_string(m) + " vs " +
                          std::to_string(mb));
    }
    for (const auto& [t, m] : b.terms)
        if (a.mult_of(t) == 0)
            out.push_back(t.to_string() + ": 0 vs " + std::to_string(m));
    return out;
}

} // namespace ktlift
