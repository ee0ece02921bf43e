#![allow(dead_code)]

pub mod farey;
