#include "prefilter/packed_sequence.hpp"

#include "prefilter/errors.hpp"

namespace prefilter {

packed_sequence packed_sequence::from_string(std::string_view raw) {
    if (raw.empty()) throw empty_sequence_error();

    packed_sequence seq;
    seq.size_ = raw.size();
    const std::size_t nwords = (raw.size() + 63) / 64;
    seq.low_plane_.assign(nwords, 0);
    seq.high_plane_.assign(nwords, 0);
    seq.n_plane_.assign(nwords, 0);

    for (std::size_t i = 0; i < raw.size(); ++i) {
        unsigned code;
        switch (raw[i]) {
            case 'A': code = 0; break;
            case 'C': code = 1; break;
            case 'G': code = 2; break;
            case 'T': code = 3; break;
            case 'N':
                seq.n_plane_[i >> 6] |= std::uint64_t{1} << (i & 63);
                continue;
            default:
                throw illegal_character_error(i, raw[i]);
        }
        if (code & 1u) seq.low_plane_[i >> 6] |= std::uint64_t{1} << (i & 63);
        if (code & 2u) seq.high_plane_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return seq;
}

std::string packed_sequence::to_string() const {
    std::string out(size_, '\0');
    for (std::size_t i = 0; i < size_; ++i) out[i] = base_at(i);
    return out;
}

}  // namespace prefilter
