// Copyright 2026 The spinqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


//! Real-valued expressions for angles and parameters: decimal numbers,
//! `pi`, `sqrt(..)`, `+ - * /`, unary minus and parentheses.

use std::f64::consts::PI;

/// Evaluates `text`. On failure returns the byte offset of the problem and a
/// message.
pub fn eval(text: &str) -> Result<f64, (usize, String)> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err((p.pos, format!("unexpected `{}`", &text[p.pos..])));
    }
    if !v.is_finite() {
        return Err((0, "expression is not finite".into()));
    }
    Ok(v)
}

/// Formats `v` so that [`eval`] gives back the same bits, using `pi/k` and
/// `k*pi` where that is exact.
pub fn format_angle(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let (sign, a) = if v < 0.0 { ("-", -v) } else { ("", v) };
    if a == PI {
        return format!("{sign}pi");
    }
    for k in 2..=1024u32 {
        if a == PI / k as f64 {
            return format!("{sign}pi/{k}");
        }
        if a == k as f64 * PI {
            return format!("{sign}{k}*pi");
        }
    }
    format!("{v:?}")
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

type R = Result<f64, (usize, String)>;

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> R {
        let mut v = self.product()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let r = self.product()?;
            v = if c == b'+' { v + r } else { v - r };
        }
        Ok(v)
    }

    fn product(&mut self) -> R {
        let mut v = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let r = self.unary()?;
            v = if c == b'*' { v * r } else { v / r };
        }
        Ok(v)
    }

    fn unary(&mut self) -> R {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> R {
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err((self.pos, "missing `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let begin = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let word = std::str::from_utf8(&self.s[begin..self.pos]).unwrap_or("");
                if word.eq_ignore_ascii_case("pi") {
                    Ok(PI)
                } else if word.eq_ignore_ascii_case("sqrt") {
                    if self.peek() != Some(b'(') {
                        return Err((self.pos, "`sqrt` needs `(`".into()));
                    }
                    let v = self.atom()?;
                    if v < 0.0 {
                        return Err((begin, "square root of a negative number".into()));
                    }
                    Ok(v.sqrt())
                } else if word.eq_ignore_ascii_case("inf") || word.eq_ignore_ascii_case("nan") {
                    Err((begin, format!("`{word}` is not allowed")))
                } else {
                    Err((begin, format!("unknown name `{word}`")))
                }
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let begin = self.pos;
                while self.pos < self.s.len() {
                    let c = self.s[self.pos];
                    let exp_sign = (c == b'-' || c == b'+') && matches!(self.s[self.pos - 1], b'e' | b'E');
                    if c.is_ascii_digit() || c == b'.' || c == b'e' || c == b'E' || exp_sign {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let t = std::str::from_utf8(&self.s[begin..self.pos]).unwrap_or("");
                t.parse::<f64>().map_err(|_| (begin, format!("bad number `{t}`")))
            }
            Some(c) => Err((self.pos, format!("unexpected `{}`", c as char))),
            None => Err((start, "expression expected".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(eval("pi/2").unwrap(), PI / 2.0);
        assert_eq!(eval("-PI / 4").unwrap(), -PI / 4.0);
        assert_eq!(eval("2*pi").unwrap(), 2.0 * PI);
        assert_eq!(eval("1.5e-3").unwrap(), 1.5e-3);
        assert_eq!(eval("-0.43e-6").unwrap(), -0.43e-6);
        assert_eq!(eval("(1 + 2) * 3 - 4 / 8").unwrap(), 8.5);
        assert_eq!(eval("--1").unwrap(), 1.0);
        assert_eq!(eval("-sqrt(1/2)").unwrap(), -(0.5f64).sqrt());
        assert!(eval("sqrt(-1)").is_err());
        assert!(eval("sqrt 2").is_err());
        assert!(eval("pi/").is_err());
        assert!(eval("tau").is_err());
        assert!(eval("1/0").is_err());
        assert!(eval("(1").is_err());
        assert!(eval("1 2").is_err());
        assert_eq!(eval("x").unwrap_err().0, 0);
    }

    #[test]
    fn named_angles() {
        assert_eq!(format_angle(PI / 2.0), "pi/2");
        assert_eq!(format_angle(-PI / 8.0), "-pi/8");
        assert_eq!(format_angle(PI), "pi");
        assert_eq!(format_angle(3.0 * PI), "3*pi");
        assert_eq!(format_angle(0.25), "0.25");
    }

    proptest! {
        #[test]
        fn format_round_trips(v in -1e6f64..1e6) {
            prop_assert_eq!(eval(&format_angle(v)).unwrap(), v);
        }

        #[test]
        fn pi_fractions_round_trip(k in 1u32..2000, neg: bool) {
            let v = if neg { -PI / k as f64 } else { PI / k as f64 };
            prop_assert_eq!(eval(&format_angle(v)).unwrap(), v);
        }
    }
}
