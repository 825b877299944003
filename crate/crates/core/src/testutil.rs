use crate::group::{parse_group_spec, realize, GroupTable};

pub fn group(src: &str) -> GroupTable {
    realize(&parse_group_spec(src).unwrap(), 10_000).unwrap()
}

pub fn cyclic(n: u32) -> GroupTable {
    group(&format!("[pc]\ngens: a\npow: a^{n} = 1"))
}

pub fn klein() -> GroupTable {
    group("[pc]\ngens: a,b\npow: a^2 = 1\npow: b^2 = 1")
}

pub fn d8() -> GroupTable {
    group("[pc]\ngens: a,b,c\npow: a^2 = 1\npow: b^2 = c\npow: c^2 = 1\nconj: b^a = b*c")
}

pub fn q8() -> GroupTable {
    group("[pc]\ngens: a,b,c\npow: a^2 = c\npow: b^2 = c\npow: c^2 = 1\nconj: b^a = b*c")
}

pub fn s3() -> GroupTable {
    group("[perm]\ndegree: 3\ngen: (1 2 3)\ngen: (1 2)")
}

pub fn s4() -> GroupTable {
    group("[perm]\ndegree: 4\ngen: (1 2 3 4)\ngen: (1 2)")
}

pub fn a5() -> GroupTable {
    group("[perm]\ndegree: 5\ngen: (1 2 3 4 5)\ngen: (1 2 3)")
}

pub fn extraspecial27() -> GroupTable {
    group("[pc]\ngens: a,b,c\npow: a^3 = 1\npow: b^3 = 1\npow: c^3 = 1\nconj: b^a = b*c")
}

pub fn g32_6() -> GroupTable {
    group(
        "[pc]\ngens: a,b,c,d,e\npow: a^2 = d\npow: b^2 = 1\npow: c^2 = 1\npow: d^2 = 1\npow: e^2 = 1\n\
         conj: b^a = b*c\nconj: c^a = c*e\nconj: d^b = d*e",
    )
}
