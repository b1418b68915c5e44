//! Finite groups, conjugacy classes, cyclic subgroups and character tables.

use ramiq::io::example;
use ramiq::{CharacterTable, ClassFunction, FiniteGroup};

fn main() -> ramiq::Result<()> {
    let z6 = FiniteGroup::cyclic(6)?;
    let orders: Vec<usize> = z6.cyclic_subgroups().iter().map(|h| h.order()).collect();
    println!("Z/6 cyclic subgroup orders: {orders:?}");

    let klein = FiniteGroup::abelian_product(&[2, 2])?;
    let table = CharacterTable::abelian(&klein)?;
    for (name, chi) in table.names().iter().zip(table.irreducibles()) {
        println!("Klein {name}: {chi}");
    }

    // S₃ from permutations of {1, 2, 3}
    let s3 = FiniteGroup::from_permutation_generators(&[vec![vec![1, 2]], vec![vec![1, 2, 3]]])?;
    println!("S3: order {}, classes {:?}", s3.order(), s3.conjugacy_classes());

    // non-abelian tables are supplied; the corpus carries one for S₃
    let s = example("s3_projective_line")?;
    let regular = ClassFunction::regular(&s.group);
    let d = s.table.decompose(&regular)?;
    let parts: Vec<String> = s.table.names().iter().zip(&d.multiplicities).map(|(n, m)| format!("{m}·{n}")).collect();
    println!("regular representation of S3 = {}", parts.join(" + "));

    let r = s.group.subgroup(&[0, 1, 2])?;
    let standard = &s.table.irreducibles()[2];
    println!("standard restricted to the rotations: {}", standard.restrict(&r)?);
    println!("trivial induced from the rotations: {}", ClassFunction::trivial(r.local()).induce(&r)?);
    Ok(())
}
