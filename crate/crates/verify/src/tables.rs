//! Expected hop distances inside variable and clause gadgets.


/// Path vertices per clause-gadget path.
const LEN: u32 = 15;

/// Hop distances `(d_x, d_y, d_z)` from every named clause-gadget vertex to
/// the nearest forced landmark of the variable on pair 1, 2 and 3.
pub fn clause_table() -> Vec<(String, [u32; 3])> {
    let mut rows: Vec<(String, [u32; 3])> = vec![
        ("m".into(), [66, 66, 66]),
        ("w1".into(), [67, 67, 67]),
        ("w2".into(), [67, 67, 67]),
        ("c1".into(), [67, 68, 68]),
        ("c2".into(), [68, 68, 67]),
        ("c3".into(), [68, 67, 68]),
    ];
    for i in 0..3 {
        for j in 1..=LEN {
            let mut d = if j == LEN { [82; 3] } else { [68 + j; 3] };
            d[i] = if j == LEN { 52 } else { 67 - j };
            rows.push((format!("t{}_{j}", i + 1), d));
        }
        for j in 1..=LEN {
            let mut d = [66 + j; 3];
            d[i] = 66 - j;
            rows.push((format!("f{}_{j}", i + 1), d));
        }
    }
    rows
}
