//! Published reference tables of reverse 2-cable polynomials, stored in the
//! CSV layout of [`ZVTable::to_csv`].

use crate::error::Result;
use crate::zv::ZVTable;

#[derive(Clone, Copy, Debug)]
pub struct ReferenceTable {
    pub id: u32,
    pub m: u32,
    pub n: u32,
    /// Absolute framing per base component.
    pub framing: &'static [i64],
    pub csv: &'static str,
}

impl ReferenceTable {
    pub fn table(&self) -> Result<ZVTable> {
        ZVTable::from_csv(self.csv)
    }
}

pub fn reference_table(id: u32) -> Option<&'static ReferenceTable> {
    TABLES.iter().find(|t| t.id == id)
}

pub static TABLES: [ReferenceTable; 5] = [
    ReferenceTable {
        id: 1,
        m: 2,
        n: 5,
        framing: &[-5],
        csv: "\
z\\v,-3,-1,1,3,5,7,9\n\
-1,-9,21,-16,4,0,0,0\n\
1,-24,71,-50,5,1,1,1\n\
3,-22,84,-63,1,0,0,0\n\
5,-8,45,-37,0,0,0,0\n\
7,-1,11,-10,0,0,0,0\n\
9,0,1,-1,0,0,0,0\n",
    },
    ReferenceTable {
        id: 2,
        m: 2,
        n: 11,
        framing: &[-11],
        csv: "\
z\\v,-3,-1,1,3,5,7,9,11,13,15,17,19,21\n\
-1,-36,96,-85,25,0,0,0,0,0,0,0,0,0\n\
1,-420,1131,-910,201,1,1,1,1,1,1,1,1,1\n\
3,-1897,5319,-4032,610,0,0,0,0,0,0,0,0,0\n\
5,-4352,13237,-9805,920,0,0,0,0,0,0,0,0,0\n\
7,-5776,19678,-14673,771,0,0,0,0,0,0,0,0,0\n\
9,-4744,18643,-14275,376,0,0,0,0,0,0,0,0,0\n\
11,-2486,11642,-9262,106,0,0,0,0,0,0,0,0,0\n\
13,-832,4846,-4030,16,0,0,0,0,0,0,0,0,0\n\
15,-172,1330,-1159,1,0,0,0,0,0,0,0,0,0\n\
17,-20,231,-211,0,0,0,0,0,0,0,0,0,0\n\
19,-1,23,-22,0,0,0,0,0,0,0,0,0,0\n\
21,0,1,-1,0,0,0,0,0,0,0,0,0,0\n",
    },
    ReferenceTable {
        id: 3,
        m: 3,
        n: 4,
        framing: &[-8],
        csv: "\
z\\v,-5,-3,-1,1,3,5,7\n\
-1,-25,75,-85,45,-11,1,0\n\
1,-100,350,-408,206,-44,2,2\n\
3,-160,630,-757,349,-62,0,0\n\
5,-130,585,-705,287,-37,0,0\n\
7,-56,308,-363,121,-10,0,0\n\
9,-12,93,-105,25,-1,0,0\n\
11,-1,15,-16,2,0,0,0\n\
13,0,1,-1,0,0,0,0\n",
    },
    ReferenceTable {
        id: 4,
        m: 3,
        n: 7,
        framing: &[-14],
        csv: "\
z\\v,-5,-3,-1,1,3,5,7,9,11,13\n\
-1,-144,528,-760,536,-185,25,0,0,0,0\n\
1,-1584,5920,-8234,5261,-1459,102,2,2,2,2\n\
3,-7524,28596,-38772,22812,-5272,160,0,0,0,0\n\
5,-20328,79028,-104710,57190,-11310,130,0,0,0,0\n\
7,-34716,139820,-181104,91696,-15752,56,0,0,0,0\n\
9,-39492,167820,-212434,98838,-14744,12,0,0,0,0\n\
11,-30769,141165,-174526,73512,-9383,1,0,0,0,0\n\
13,-16610,84645,-102103,38115,-4047,0,0,0,0,0\n\
15,-6193,36349,-42715,13719,-1160,0,0,0,0,0\n\
17,-1562,11090,-12672,3355,-211,0,0,0,0,0\n\
19,-254,2346,-2601,531,-22,0,0,0,0,0\n\
21,-24,327,-351,49,-1,0,0,0,0,0\n\
23,-1,27,-28,2,0,0,0,0,0,0\n\
25,0,1,-1,0,0,0,0,0,0,0\n",
    },
    ReferenceTable {
        id: 5,
        m: 3,
        n: 12,
        framing: &[0, 0, 0],
        csv: "\
z\\v,-5,-3,-1,1,3,5,7,9,11,13,15,17,19,21,23\n\
-5,-11,-11,-10,26,5,1,0,0,0,0,0,0,0,0,0\n\
-3,-2138,-3123,-475,3789,1911,30,18,-18,6,0,0,0,0,0,0\n\
-1,-73146,-112956,-9402,124628,70234,522,330,-282,72,0,-9,9,0,0,0\n\
1,-996684,-1584078,-95046,1681752,987298,5984,2126,-1624,272,-4,-4,2,2,2,2\n\
3,-7184691,-11634737,-592970,12111874,7254903,43737,5676,-4164,372,0,0,0,0,0,0\n\
5,-31609050,-51945059,-2466115,53420915,32403009,194098,7770,-5790,222,0,0,0,0,0,0\n\
7,-92427173,-153901035,-7147177,156866451,96049439,558115,6012,-4692,60,0,0,0,0,0,0\n\
9,-189895362,-320221087,-14912425,323970681,199954829,1102890,2730,-2262,6,0,0,0,0,0,0\n\
11,-284749628,-486266654,-22982519,488654927,303785858,1557932,720,-636,0,0,0,0,0,0,0\n\
13,-319999214,-553472921,-26692421,552641876,345909242,1613432,102,-96,0,0,0,0,0,0,0\n\
15,-274472117,-480911809,-23716007,477208635,300647119,1244179,6,-6,0,0,0,0,0,0,0\n\
17,-181826796,-322794482,-16287176,318353438,201834960,720056,0,0,0,0,0,0,0,0,0\n\
19,-93628147,-168439053,-8695805,165120651,105329345,313009,0,0,0,0,0,0,0,0,0\n\
21,-37521836,-68412618,-3613274,66665888,42780334,101506,0,0,0,0,0,0,0,0,0\n\
23,-11653501,-21535255,-1163599,20862369,13465831,24155,0,0,0,0,0,0,0,0,0\n\
25,-2774868,-5197330,-287336,5005906,3249538,4090,0,0,0,0,0,0,0,0,0\n\
27,-496702,-942884,-53355,903021,589454,466,0,0,0,0,0,0,0,0,0\n\
29,-64640,-124350,-7206,118434,77730,32,0,0,0,0,0,0,0,0,0\n\
31,-5771,-11249,-668,10656,7031,1,0,0,0,0,0,0,0,0,0\n\
33,-316,-624,-38,588,390,1,0,0,0,0,0,0,0,0,0\n\
35,-8,-16,-1,15,10,0,0,0,0,0,0,0,0,0,0\n",
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse() {
        for t in &TABLES {
            let z = t.table().unwrap();
            assert_eq!(z.pole_order as usize, 2 * t.framing.len() - 1, "table {}", t.id);
        }
        assert_eq!(reference_table(1).unwrap().table().unwrap().coeff(1, -3), (-24).into());
    }
}
