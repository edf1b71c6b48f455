#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "synmon/alphabet.hpp"
#include "synmon/errors.hpp"

namespace synmon {

/// Free-monoid morphism given by the image word of each source letter.
/// Length-preserving: every image is a single letter. Length-decreasing:
/// every image is a letter or the empty word.
struct Morphism {
    enum class Kind { LengthPreserving, LengthDecreasing, General };

    Alphabet source;
    Alphabet target;
    std::vector<std::string> images; // indexed like source symbols

    Kind kind() const {
        bool lp = true, ld = true;
        for (const auto& w : images) {
            if (w.size() != 1)
                lp = false;
            if (w.size() > 1)
                ld = false;
        }
        if (lp)
            return Kind::LengthPreserving;
        return ld ? Kind::LengthDecreasing : Kind::General;
    }

    bool length_preserving() const { return kind() == Kind::LengthPreserving; }
    bool length_decreasing() const { return kind() != Kind::General; }

    const std::string& image(char a) const {
        int i = source.index_of(a);
        if (i < 0)
            throw error(std::string("letter '") + a + "' is not in the source alphabet");
        return images[static_cast<std::size_t>(i)];
    }

    std::string apply(std::string_view word) const {
        std::string out;
        for (char a : word)
            out += image(a);
        return out;
    }
};

inline Morphism make_morphism(Alphabet source, Alphabet target, std::vector<std::string> images) {
    if (static_cast<int>(images.size()) != source.size())
        throw error("morphism needs exactly one image word per source letter");
    for (const auto& w : images)
        for (char c : w)
            if (!target.contains(c))
                throw error(std::string("image letter '") + c + "' is not in the target alphabet");
    return Morphism{std::move(source), std::move(target), std::move(images)};
}

inline Morphism identity_morphism(const Alphabet& a) {
    std::vector<std::string> images;
    for (char c : a.symbols())
        images.emplace_back(1, c);
    return Morphism{a, a, std::move(images)};
}

} // namespace synmon
