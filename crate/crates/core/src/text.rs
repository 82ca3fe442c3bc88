//! Text form of front words: whitespace-separated `L<n>`, `R<n>`, `X<n>` tokens.

use crate::error::{Error, Result};
use crate::front::{Event, EventKind, FrontWord};

fn parse_token(token: &str) -> Option<Event> {
    let mut chars = token.chars();
    let kind = match chars.next()? {
        'L' => EventKind::LeftCusp,
        'R' => EventKind::RightCusp,
        'X' => EventKind::Crossing,
        _ => return None,
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(Event {
        kind,
        pos: digits.parse().ok()?,
    })
}

/// Tokenizes without validating the sweep.
pub fn parse_events(text: &str) -> Result<Vec<Event>> {
    let mut events = Vec::new();
    let mut rest = text;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let token = &tail[..len];
        let event = parse_token(token).ok_or_else(|| Error::BadToken {
            offset: offset + start,
            token: token.to_string(),
        })?;
        events.push(event);
        offset += start + len;
        rest = &tail[len..];
    }
    Ok(events)
}

pub fn parse_word(text: &str) -> Result<FrontWord> {
    FrontWord::new(parse_events(text)?)
}

pub fn format_word(f: &FrontWord) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_saucer() {
        let f = parse_word("L0 R0").unwrap();
        assert_eq!(f.events(), &[Event::left(0), Event::right(0)]);
        assert_eq!(format_word(&f), "L0 R0");
    }

    #[test]
    fn lowercase_is_rejected() {
        assert_eq!(
            parse_word("l0 r0"),
            Err(Error::BadToken {
                offset: 0,
                token: "l0".into()
            })
        );
    }

    #[test]
    fn offsets_point_at_the_token() {
        assert_eq!(
            parse_word("L0  X0,R0"),
            Err(Error::BadToken {
                offset: 4,
                token: "X0,R0".into()
            })
        );
        for bad in ["L", "L-1", "L+1", "Lx", "Y0", "L 0"] {
            assert!(matches!(parse_word(bad), Err(Error::BadToken { .. })), "{bad}");
        }
    }

    #[test]
    fn canonicalizes_whitespace() {
        let f = parse_word("  L0\tL1 X2\nX2 X2   R1 R0 ").unwrap();
        assert_eq!(format_word(&f), "L0 L1 X2 X2 X2 R1 R0");
        assert_eq!(f.crossing_count(), 3);
    }

    #[test]
    fn empty_text_is_an_empty_word() {
        assert_eq!(parse_word("   "), Err(Error::EmptyWord));
    }

    #[test]
    fn validation_errors_propagate() {
        assert!(matches!(parse_word("L0 R1"), Err(Error::IndexOutOfRange { .. })));
    }
}
