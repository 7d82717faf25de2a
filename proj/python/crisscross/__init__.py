"""q-ary single criss-cross deletion correcting code.

Sequences are lists of ints, arrays are lists of rows, and every position
is 1-based.
"""

from ._core import (
    AmbiguousCodeword,
    DecodeError,
    Error,
    InvalidArgument,
    NoCandidate,
    NotACodeword,
    NotDecodable,
    OutsideEncoderImage,
    analyze,
    array_file_text,
    check_codeword,
    check_zero_sums,
    corrupt,
    count_code_size,
    data_file_text,
    decode,
    decode_deletion,
    decode_insertion,
    decode_rll_deletion,
    diff,
    diff_inverse,
    encode,
    is_codeword,
    is_dvt_member,
    message_lengths,
    parse_file_text,
    recover_data,
    rll_decode,
    rll_encode,
    rll_index_sets,
    rll_is_member,
    rll_recover_data,
    selftest,
    syndrome,
    verify_fixtures,
)

__version__ = "0.1.0"
