//! Integer partitions as weakly decreasing vectors of positive parts.

pub type Partition = Vec<usize>;

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// No part occurs `p` or more times.
pub fn is_p_regular(mu: &[usize], p: u32) -> bool {
    let p = p as usize;
    let mut i = 0;
    while i < mu.len() {
        let j = mu[i..].iter().take_while(|&&x| x == mu[i]).count();
        if j >= p {
            return false;
        }
        i += j;
    }
    true
}

pub fn p_regular_partitions(n: usize, p: u32) -> Vec<Partition> {
    partitions(n).into_iter().filter(|mu| is_p_regular(mu, p)).collect()
}

pub fn is_partition(mu: &[usize]) -> bool {
    mu.iter().all(|&x| x > 0) && mu.windows(2).all(|w| w[0] >= w[1])
}

pub fn size(mu: &[usize]) -> usize {
    mu.iter().sum()
}

/// Cells `(row, col)`, zero-indexed, in row-reading order.
pub fn cells(mu: &[usize]) -> Vec<(usize, usize)> {
    mu.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect()
}

/// Rows where a cell can be added, top to bottom; the cell is at
/// `(row, mu[row])` (or `(len, 0)` for a new row).
pub fn addable_rows(mu: &[usize]) -> Vec<usize> {
    (0..=mu.len()).filter(|&r| r == 0 || r == mu.len() || mu[r] < mu[r - 1]).collect()
}

/// Rows whose last cell can be removed, top to bottom.
pub fn removable_rows(mu: &[usize]) -> Vec<usize> {
    (0..mu.len()).filter(|&r| r + 1 == mu.len() || mu[r] > mu[r + 1]).collect()
}

pub fn add_in_row(mu: &[usize], row: usize) -> Partition {
    let mut out = mu.to_vec();
    if row == out.len() {
        out.push(1);
    } else {
        out[row] += 1;
    }
    out
}

pub fn remove_from_row(mu: &[usize], row: usize) -> Partition {
    let mut out = mu.to_vec();
    out[row] -= 1;
    if out[row] == 0 {
        out.pop();
    }
    out
}
