use super::{BraidError, BraidWord};

/// Expansion of the `D45` macro: the half twist of strands 4, 5 and 6.
const DELTA_45: [i32; 3] = [4, 5, 4];

/// Parses braid text.
///
/// Tokens are separated by whitespace or commas. Accepted tokens: an optional
/// leading header `B<n>`, signed integers (`3`, `-2`), generator names
/// (`s3`, `s2^-1`) and the macro `D45`.
pub(crate) fn parse_braid(text: &str) -> Result<BraidWord, BraidError> {
    let mut header: Option<usize> = None;
    let mut letters = Vec::new();

    let tokens = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty());
    for (index, token) in tokens.enumerate() {
        if let Some(count) = token.strip_prefix('B') {
            if index != 0 {
                return Err(BraidError::MisplacedHeader(token.to_string()));
            }
            let n = parse_unsigned(count).ok_or_else(|| malformed(token))?;
            if n == 0 {
                return Err(BraidError::ZeroStrands);
            }
            header = Some(n);
            continue;
        }
        if token == "D45" {
            letters.extend_from_slice(&DELTA_45);
            continue;
        }
        letters.push(parse_letter(token)?);
    }

    let strand_count = match header {
        Some(n) => n,
        None => {
            let widest = letters
                .iter()
                .map(|e| e.unsigned_abs() as usize)
                .max()
                .ok_or(BraidError::UndeterminedStrandCount)?;
            widest + 1
        }
    };
    BraidWord::new(strand_count, letters)
}

fn parse_letter(token: &str) -> Result<i32, BraidError> {
    let letter = match token.strip_prefix('s') {
        Some(rest) => {
            let (index, power) = match rest.split_once('^') {
                Some((index, power)) => (index, power),
                None => (rest, "1"),
            };
            let index = parse_unsigned(index).ok_or_else(|| malformed(token))?;
            let index = i32::try_from(index).map_err(|_| malformed(token))?;
            match power {
                "1" | "+1" => index,
                "-1" => -index,
                _ => return Err(malformed(token)),
            }
        }
        None => token.parse::<i32>().map_err(|_| malformed(token))?,
    };
    if letter == 0 {
        return Err(malformed(token));
    }
    Ok(letter)
}

fn parse_unsigned(digits: &str) -> Option<usize> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn malformed(token: &str) -> BraidError {
    BraidError::MalformedToken(token.to_string())
}
