#include "nambu/dga.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "nambu/errors.hpp"

namespace nambu {

std::string bidegree_str(const Bidegree& d) {
    return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

std::size_t GeneratorSet::add(std::string name, Bidegree degree) {
    gens_.push_back(GeneratorInfo{std::move(name), degree});
    return gens_.size() - 1;
}

const GeneratorInfo& GeneratorSet::info(std::size_t id) const {
    if (id >= gens_.size()) throw BoundsError("generator id out of range");
    return gens_[id];
}

int GeneratorSet::koszul(const Bidegree& x, const Bidegree& y) const {
    const long e = rule_ == SignRule::TotalParity
                       ? static_cast<long>(x.total()) * y.total()
                       : static_cast<long>(x.p) * y.p + static_cast<long>(x.q) * y.q;
    return (((e % 2) + 2) % 2 == 0) ? 1 : -1;
}

bool GeneratorSet::squares_to_zero(std::size_t id) const {
    const Bidegree& d = info(id).degree;
    return koszul(d, d) == -1;
}

Bidegree GeneratorSet::monomial_degree(const std::vector<std::size_t>& mono) const {
    Bidegree d;
    for (std::size_t id : mono) d = d + info(id).degree;
    return d;
}

GradedElement::GradedElement(std::shared_ptr<const GeneratorSet> gens)
    : gens_(std::move(gens)) {
    if (!gens_) throw ConfigError("graded element needs a generator set");
}

GradedElement GradedElement::unit(std::shared_ptr<const GeneratorSet> gens) {
    GradedElement e(std::move(gens));
    e.terms_[{}] = 1;
    return e;
}

GradedElement GradedElement::generator(std::shared_ptr<const GeneratorSet> gens,
                                       std::size_t id) {
    GradedElement e(std::move(gens));
    e.gens_->info(id);  // bounds check
    e.terms_[{id}] = 1;
    return e;
}

void GradedElement::add_word(const std::vector<std::size_t>& word,
                             const Rational& coeff) {
    if (coeff == 0) return;
    std::vector<std::size_t> w = word;
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && w[j] < w[j - 1]) {
            sign *= gens_->koszul(gens_->info(w[j - 1]).degree,
                                  gens_->info(w[j]).degree);
            std::swap(w[j], w[j - 1]);
            --j;
        }
    }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] && gens_->squares_to_zero(w[i])) return;
    Rational& slot = terms_[w];
    slot += Rational(sign) * coeff;
    if (slot == 0) terms_.erase(w);
}

std::optional<Bidegree> GradedElement::degree() const {
    std::optional<Bidegree> d;
    for (const auto& [mono, c] : terms_) {
        const Bidegree md = gens_->monomial_degree(mono);
        if (!d)
            d = md;
        else if (!(*d == md))
            return std::nullopt;
    }
    return d;
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    GradedElement out = *this;
    for (const auto& [mono, c] : o.terms_) {
        Rational& slot = out.terms_[mono];
        slot += c;
        if (slot == 0) out.terms_.erase(mono);
    }
    return out;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
    return *this + (-o);
}

GradedElement GradedElement::operator-() const { return *this * Rational(-1); }

GradedElement GradedElement::operator*(const GradedElement& o) const {
    GradedElement out(gens_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            std::vector<std::size_t> word = ma;
            word.insert(word.end(), mb.begin(), mb.end());
            out.add_word(word, ca * cb);
        }
    return out;
}

GradedElement GradedElement::operator*(const Rational& scalar) const {
    GradedElement out(gens_);
    if (scalar == 0) return out;
    for (const auto& [mono, c] : terms_) out.terms_[mono] = c * scalar;
    return out;
}

bool GradedElement::operator==(const GradedElement& o) const {
    return terms_ == o.terms_;
}

std::string GradedElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string names;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (i) names += "*";
            names += gens_->info(mono[i]).name;
        }
        if (mono.empty())
            s += rational_str(mag);
        else if (mag == 1)
            s += names;
        else
            s += rational_str(mag) + " " + names;
    }
    return s;
}

Differential::Differential(std::shared_ptr<const GeneratorSet> gens, Bidegree shift)
    : gens_(std::move(gens)), shift_(shift) {
    if (!gens_) throw ConfigError("differential needs a generator set");
    images_.assign(gens_->size(), GradedElement(gens_));
}

void Differential::set_image(std::size_t id, GradedElement image) {
    if (id >= images_.size()) throw BoundsError("set_image: id out of range");
    images_[id] = std::move(image);
}

const GradedElement& Differential::image(std::size_t id) const {
    if (id >= images_.size()) throw BoundsError("image: id out of range");
    return images_[id];
}

GradedElement Differential::apply(const GradedElement& x) const {
    GradedElement out(gens_);
    for (const auto& [mono, c] : x.terms()) {
        int prefix_sign = 1;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            const GradedElement& img = images_[mono[i]];
            if (!img.is_zero()) {
                for (const auto& [imono, ic] : img.terms()) {
                    std::vector<std::size_t> word(mono.begin(), mono.begin() + i);
                    word.insert(word.end(), imono.begin(), imono.end());
                    word.insert(word.end(), mono.begin() + i + 1, mono.end());
                    out.add_word(word, Rational(prefix_sign) * c * ic);
                }
            }
            prefix_sign *= gens_->koszul(shift_, gens_->info(mono[i]).degree);
        }
    }
    return out;
}

CheckReport Differential::check_nilpotent() const {
    CheckReport report{.check = "nilpotent", .notes = {}, .violations = {}};
    for (std::size_t id = 0; id < images_.size(); ++id) {
        const GradedElement r = apply(images_[id]);
        if (!r.is_zero())
            report.violations.push_back(Violation{{id}, gens_->info(id).name + ": " + r.str()});
    }
    return report;
}

CheckReport Differential::check_degree_consistency() const {
    CheckReport report{.check = "degree_consistency", .notes = {}, .violations = {}};
    for (std::size_t id = 0; id < images_.size(); ++id) {
        if (images_[id].is_zero()) continue;
        const Bidegree want = gens_->info(id).degree + shift_;
        bool bad = false;
        for (const auto& [mono, c] : images_[id].terms())
            if (!(gens_->monomial_degree(mono) == want)) bad = true;
        const auto got = images_[id].degree();
        if (bad)
            report.violations.push_back(Violation{
                {id}, gens_->info(id).name + ": expected " + bidegree_str(want) +
                          ", image has " +
                          (got ? bidegree_str(*got) : std::string("mixed")) +
                          " degree"});
    }
    return report;
}

CheckReport Differential::check_leibniz(std::uint64_t seed, std::size_t trials) const {
    CheckReport report{.check = "leibniz", .notes = {}, .violations = {}};
    report.notes.push_back("randomized product pairs, seed " + std::to_string(seed));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len_dist(0, 3);
    std::uniform_int_distribution<std::size_t> id_dist(0, gens_->size() - 1);
    std::uniform_int_distribution<int> num_dist(-3, 3);
    std::uniform_int_distribution<int> den_dist(1, 3);

    auto random_element = [&]() {
        GradedElement e(gens_);
        const std::size_t nterms = 1 + len_dist(rng) % 3;
        for (std::size_t t = 0; t < nterms; ++t) {
            std::vector<std::size_t> word(len_dist(rng));
            for (auto& id : word) id = id_dist(rng);
            int num = num_dist(rng);
            if (num == 0) num = 1;
            e.add_word(word, Rational(num, den_dist(rng)));
        }
        return e;
    };

    for (std::size_t t = 0; t < trials; ++t) {
        const GradedElement x = random_element();
        const GradedElement y = random_element();
        // per-monomial sign for moving D past x
        GradedElement x_signed(gens_);
        for (const auto& [mono, c] : x.terms()) {
            const int s = gens_->koszul(shift_, gens_->monomial_degree(mono));
            x_signed.add_word(mono, Rational(s) * c);
        }
        const GradedElement lhs = apply(x * y);
        const GradedElement rhs = apply(x) * y + x_signed * apply(y);
        const GradedElement res = lhs - rhs;
        if (!res.is_zero())
            report.violations.push_back(
                Violation{{t}, "x=" + x.str() + "; y=" + y.str() +
                                   "; residual=" + res.str()});
    }
    return report;
}

CheckReport check_sum_nilpotent(const Differential& d1, const Differential& d2,
                                const std::string& check_name) {
    CheckReport report{.check = check_name, .notes = {}, .violations = {}};
    const GeneratorSet& gens = *d1.gens();
    for (std::size_t id = 0; id < gens.size(); ++id) {
        const GradedElement dg = d1.image(id) + d2.image(id);
        const GradedElement r = d1.apply(dg) + d2.apply(dg);
        if (!r.is_zero())
            report.violations.push_back(Violation{{id}, gens.info(id).name + ": " + r.str()});
    }
    return report;
}

CheckReport check_anticommute(const Differential& d1, const Differential& d2,
                              const std::string& check_name) {
    CheckReport report{.check = check_name, .notes = {}, .violations = {}};
    const GeneratorSet& gens = *d1.gens();
    for (std::size_t id = 0; id < gens.size(); ++id) {
        const GradedElement r = d1.apply(d2.image(id)) + d2.apply(d1.image(id));
        if (!r.is_zero())
            report.violations.push_back(Violation{{id}, gens.info(id).name + ": " + r.str()});
    }
    return report;
}

}  // namespace nambu
