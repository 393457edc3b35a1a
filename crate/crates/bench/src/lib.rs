//! Shared inputs for the criterion benches.

use sesx_core::text::{fibonacci_word, random_text, thue_morse};

/// Named benchmark inputs of roughly `len` bytes.
pub fn corpus(len: usize) -> Vec<(String, Vec<u8>)> {
    let order = (usize::BITS - 1 - len.max(1).leading_zeros()) as usize;
    let mut fib = fibonacci_word(30).expect("order within range");
    fib.truncate(len);
    vec![
        (format!("random-s4-{len}"), random_text(1, len, 4).unwrap()),
        (
            format!("random-s64-{len}"),
            random_text(2, len, 64).unwrap(),
        ),
        (
            format!("thue-morse-{}", 1usize << order),
            thue_morse(order).unwrap(),
        ),
        (format!("fibonacci-{len}"), fib),
    ]
}
