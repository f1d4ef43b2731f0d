// Generated by floorplan. Do not edit.
#![allow(dead_code, non_camel_case_types, non_snake_case, non_upper_case_globals, unused_parens)]

pub(crate) trait Address: Copy + Sized {
    fn from_usize(v: usize) -> Self;
    fn as_usize(self) -> usize;
    fn plus<T: Address>(self, bytes: usize) -> T { T::from_usize(self.as_usize() + bytes) }
    fn sub<T: Address>(self, bytes: usize) -> T { T::from_usize(self.as_usize() - bytes) }
    fn load<V: Copy>(self) -> V { unsafe { core::ptr::read_unaligned(self.as_usize() as *const V) } }
    fn store<V: Copy>(self, val: V) { unsafe { core::ptr::write_unaligned(self.as_usize() as *mut V, val) } }
}

macro_rules! deriveAddr {
    ($t:ident, $align:expr) => {
        impl Address for $t {
            #[inline(always)]
            fn from_usize(v: usize) -> Self {
                debug_assert!(v % ($align) == 0);
                $t(v)
            }
            #[inline(always)]
            fn as_usize(self) -> usize { self.0 }
        }
    };
}

pub const BYTES_IN_WORD: usize = 8;
pub const BYTES_IN_POINTER: usize = 8;
pub const BYTES_IN_PAGE: usize = 4096;
pub const BYTE_BYTES_ALIGN: usize = 1;
pub const BYTE_SIZE: usize = 1;
pub const WORD_BYTES_ALIGN: usize = 8;
pub const WORD_SIZE: usize = 8;
pub const PAGE_BYTES_ALIGN: usize = 4096;
pub const PAGE_SIZE: usize = 4096;
pub const REGION_BYTES_ALIGN: usize = 1;
pub const SPACE_BYTES_ALIGN: usize = 524288;
pub const SPACE_ALIGN: usize = 19;
pub const FREE_BLOCK_BYTES_ALIGN: usize = 65536;
pub const FREE_BLOCK_ALIGN: usize = 16;
pub const FREE_BLOCK_SIZE: usize = 65536;
pub const BLOCK_BYTES_ALIGN: usize = 65536;
pub const BLOCK_ALIGN: usize = 16;
pub const BLOCK_SIZE: usize = 65536;
pub const CELLS_BYTES_ALIGN: usize = 1;
pub const FREE_CELL_BYTES_ALIGN: usize = 8;
pub const FREE_CELL_ALIGN: usize = 3;
pub const CELL_BYTES_ALIGN: usize = 8;
pub const CELL_ALIGN: usize = 3;
pub const CELL_0_BYTES_ALIGN: usize = 1;
pub const CELL_0_SIZE: usize = 8;
pub const CELL_1_BYTES_ALIGN: usize = 1;
pub const CELL_1_SIZE: usize = 8;
pub const CELL_2_BYTES_ALIGN: usize = 1;
pub const CELL_2_SIZE: usize = 8;
pub const CELL_3_BYTES_ALIGN: usize = 1;
pub const CELL_3_SIZE: usize = 8;
pub const PAYLOAD_BYTES_ALIGN: usize = 1;
pub const REMAINDER_BYTES_ALIGN: usize = 1;
pub const LIMIT_BYTES_ALIGN: usize = 1;
pub const LIMIT_SIZE: usize = 0;
pub const LINE_BYTES_ALIGN: usize = 256;
pub const LINE_ALIGN: usize = 8;
pub const LINE_SIZE: usize = 256;
pub const LMS_BYTES_ALIGN: usize = 1;
pub const LINE_MARK_BYTES_ALIGN: usize = 1;
pub const LINE_MARK_SIZE: usize = 1;
pub const REFS_BYTES_ALIGN: usize = 1;
pub const REF_BITS_BYTES_ALIGN: usize = 1;
pub const REF_BITS_SIZE: usize = 1;
pub const MKS_BYTES_ALIGN: usize = 1;
pub const MARK_BITS_BYTES_ALIGN: usize = 1;
pub const MARK_BITS_SIZE: usize = 1;
pub const STK_BYTES_ALIGN: usize = 1;
pub const STACK_BYTES_ALIGN: usize = 1;
pub const LOW_WATER_BYTES_ALIGN: usize = 1;
pub const LOW_WATER_SIZE: usize = 0;
pub const REGISTERS_BYTES_ALIGN: usize = 1;
pub const REGS_BYTES_ALIGN: usize = 1;
pub const REGS_END_BYTES_ALIGN: usize = 1;
pub const REGS_END_SIZE: usize = 0;
pub const SPACE_OFFSET: usize = 0;
pub const CELLS_OFFSET: usize = 0;
pub const CELL_0_OFFSET: usize = 0;
pub const CELL_1_OFFSET: usize = 8;
pub const CELL_2_OFFSET: usize = 16;
pub const CELL_3_OFFSET: usize = 24;
pub const PAYLOAD_OFFSET: usize = 32;
pub const STACK_OFFSET: usize = 0;
pub const REGS_OFFSET: usize = 0;
pub const LINE_STRIDE: usize = 256;

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ByteAddr(usize);
deriveAddr!(ByteAddr, BYTE_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordAddr(usize);
deriveAddr!(WordAddr, WORD_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PageAddr(usize);
deriveAddr!(PageAddr, PAGE_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegionAddr(usize);
deriveAddr!(RegionAddr, REGION_BYTES_ALIGN);
impl RegionAddr {
    pub fn space(self) -> SpaceAddr {
        self.plus::<SpaceAddr>(SPACE_OFFSET)
    }
    pub fn from_space(x: SpaceAddr) -> Self {
        x.sub::<Self>(SPACE_OFFSET)
    }
    pub fn get_first_free_block(self) -> FreeBlockAddr {
        self.plus::<FreeBlockAddr>(0)
    }
    pub fn get_first_block(self) -> BlockAddr {
        self.plus::<BlockAddr>(0)
    }
    pub fn get_first_cells(self) -> CellsAddr {
        self.plus::<CellsAddr>(0)
    }
    pub fn get_first_free_cell(self) -> FreeCellAddr {
        self.plus::<FreeCellAddr>(0)
    }
    pub fn get_first_cell(self) -> CellAddr {
        self.plus::<CellAddr>(0)
    }
    pub fn get_first_cell_0(self) -> Cell_0Addr {
        self.plus::<Cell_0Addr>(0)
    }
    pub fn get_first_line(self) -> LineAddr {
        self.plus::<LineAddr>(0)
    }
    pub fn init_refs_after_lms(p1: LmsAddr, bytes: usize) -> RefsAddr {
        p1.plus::<RefsAddr>(bytes)
    }
    pub fn bump_new_LineMark(rhs: RefsAddr) -> (LineMarkAddr, RefsAddr) {
        (rhs.plus::<LineMarkAddr>(0), rhs.plus::<RefsAddr>(1))
    }
    pub fn init_mks_after_refs(p1: RefsAddr, bytes: usize) -> MksAddr {
        p1.plus::<MksAddr>(bytes)
    }
    pub fn bump_new_RefBits(rhs: MksAddr) -> (RefBitsAddr, MksAddr) {
        (rhs.plus::<RefBitsAddr>(0), rhs.plus::<MksAddr>(1))
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpaceAddr(usize);
deriveAddr!(SpaceAddr, 1 << SPACE_ALIGN);
impl SpaceAddr {
    pub fn get_first_free_block(self) -> FreeBlockAddr {
        self.plus::<FreeBlockAddr>(0)
    }
    pub fn get_first_block(self) -> BlockAddr {
        self.plus::<BlockAddr>(0)
    }
    pub fn get_first_cells(self) -> CellsAddr {
        self.plus::<CellsAddr>(0)
    }
    pub fn get_first_free_cell(self) -> FreeCellAddr {
        self.plus::<FreeCellAddr>(0)
    }
    pub fn get_first_cell(self) -> CellAddr {
        self.plus::<CellAddr>(0)
    }
    pub fn get_first_cell_0(self) -> Cell_0Addr {
        self.plus::<Cell_0Addr>(0)
    }
    pub fn get_first_line(self) -> LineAddr {
        self.plus::<LineAddr>(0)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeBlockAddr(usize);
deriveAddr!(FreeBlockAddr, 1 << FREE_BLOCK_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockAddr(usize);
deriveAddr!(BlockAddr, 1 << BLOCK_ALIGN);
impl BlockAddr {
    pub fn cells(self) -> CellsAddr {
        self.plus::<CellsAddr>(CELLS_OFFSET)
    }
    pub fn from_cells(x: CellsAddr) -> Self {
        x.sub::<Self>(CELLS_OFFSET)
    }
    pub fn get_first_free_cell(self) -> FreeCellAddr {
        self.plus::<FreeCellAddr>(0)
    }
    pub fn get_first_cell(self) -> CellAddr {
        self.plus::<CellAddr>(0)
    }
    pub fn get_first_cell_0(self) -> Cell_0Addr {
        self.plus::<Cell_0Addr>(0)
    }
    pub fn first_line(self) -> LineAddr {
        self.plus::<LineAddr>(0)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellsAddr(usize);
deriveAddr!(CellsAddr, CELLS_BYTES_ALIGN);
impl CellsAddr {
    pub fn get_first_free_cell(self) -> FreeCellAddr {
        self.plus::<FreeCellAddr>(0)
    }
    pub fn get_first_cell(self) -> CellAddr {
        self.plus::<CellAddr>(0)
    }
    pub fn get_first_cell_0(self) -> Cell_0Addr {
        self.plus::<Cell_0Addr>(0)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeCellAddr(usize);
deriveAddr!(FreeCellAddr, 1 << FREE_CELL_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellAddr(usize);
deriveAddr!(CellAddr, 1 << CELL_ALIGN);
impl CellAddr {
    pub fn cell_0(self) -> Cell_0Addr {
        self.plus::<Cell_0Addr>(CELL_0_OFFSET)
    }
    pub fn from_cell_0(x: Cell_0Addr) -> Self {
        x.sub::<Self>(CELL_0_OFFSET)
    }
    pub fn cell_1(self) -> Cell_1Addr {
        self.plus::<Cell_1Addr>(CELL_1_OFFSET)
    }
    pub fn from_cell_1(x: Cell_1Addr) -> Self {
        x.sub::<Self>(CELL_1_OFFSET)
    }
    pub fn cell_2(self) -> Cell_2Addr {
        self.plus::<Cell_2Addr>(CELL_2_OFFSET)
    }
    pub fn from_cell_2(x: Cell_2Addr) -> Self {
        x.sub::<Self>(CELL_2_OFFSET)
    }
    pub fn cell_3(self) -> Cell_3Addr {
        self.plus::<Cell_3Addr>(CELL_3_OFFSET)
    }
    pub fn from_cell_3(x: Cell_3Addr) -> Self {
        x.sub::<Self>(CELL_3_OFFSET)
    }
    pub fn payload(self) -> PayloadAddr {
        self.plus::<PayloadAddr>(PAYLOAD_OFFSET)
    }
    pub fn from_payload(x: PayloadAddr) -> Self {
        x.sub::<Self>(PAYLOAD_OFFSET)
    }
    pub fn containing_line(self) -> LineAddr {
        LineAddr::from_usize((self.as_usize() & (!(LINE_SIZE - 1))))
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell_0Addr(usize);
deriveAddr!(Cell_0Addr, CELL_0_BYTES_ALIGN);
impl Cell_0Addr {
    pub fn get_cell(self) -> CellAddr {
        self.load::<CellAddr>()
    }
    pub fn set_cell(self, ptr: CellAddr) {
        self.store::<CellAddr>(ptr);
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell_1Addr(usize);
deriveAddr!(Cell_1Addr, CELL_1_BYTES_ALIGN);
impl Cell_1Addr {
    pub fn get_cell(self) -> CellAddr {
        self.load::<CellAddr>()
    }
    pub fn set_cell(self, ptr: CellAddr) {
        self.store::<CellAddr>(ptr);
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell_2Addr(usize);
deriveAddr!(Cell_2Addr, CELL_2_BYTES_ALIGN);
impl Cell_2Addr {
    pub fn get_cell(self) -> CellAddr {
        self.load::<CellAddr>()
    }
    pub fn set_cell(self, ptr: CellAddr) {
        self.store::<CellAddr>(ptr);
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell_3Addr(usize);
deriveAddr!(Cell_3Addr, CELL_3_BYTES_ALIGN);
impl Cell_3Addr {
    pub fn get_cell(self) -> CellAddr {
        self.load::<CellAddr>()
    }
    pub fn set_cell(self, ptr: CellAddr) {
        self.store::<CellAddr>(ptr);
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PayloadAddr(usize);
deriveAddr!(PayloadAddr, PAYLOAD_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RemainderAddr(usize);
deriveAddr!(RemainderAddr, REMAINDER_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LimitAddr(usize);
deriveAddr!(LimitAddr, LIMIT_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineAddr(usize);
deriveAddr!(LineAddr, 1 << LINE_ALIGN);
impl LineAddr {
    pub fn containing_block(self) -> BlockAddr {
        BlockAddr::from_usize((self.as_usize() & (!(BLOCK_SIZE - 1))))
    }
    pub fn first_cell(self) -> CellAddr {
        self.plus::<CellAddr>(0)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LmsAddr(usize);
deriveAddr!(LmsAddr, LMS_BYTES_ALIGN);
impl LmsAddr {
    pub fn get_first_line_mark(self) -> LineMarkAddr {
        self.plus::<LineMarkAddr>(0)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineMarkAddr(usize);
deriveAddr!(LineMarkAddr, LINE_MARK_BYTES_ALIGN);
impl LineMarkAddr {
    pub const Free: u8 = 0;
    pub const Live: u8 = 1;
    pub const FreshAlloc: u8 = 2;
    pub const ConservLive: u8 = 3;
    pub const PrevLive: u8 = 4;
    pub fn get_flag(self) -> u8 {
        self.load::<u8>()
    }
    pub fn set_flag(self, val: u8) {
        debug_assert!((val < 5));
        self.store::<u8>(val);
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RefsAddr(usize);
deriveAddr!(RefsAddr, REFS_BYTES_ALIGN);
impl RefsAddr {
    pub fn get_first_ref_bits(self) -> RefBitsAddr {
        self.plus::<RefBitsAddr>(0)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RefBitsAddr(usize);
deriveAddr!(RefBitsAddr, REF_BITS_BYTES_ALIGN);
impl RefBitsAddr {
    pub const SHORT_ENCODE_LOW_BIT: usize = 0;
    pub const SHORT_ENCODE_NUM_BITS: usize = 1;
    pub const SHORT_ENCODE_MASK: u8 = 0b00000001;
    pub const OBJ_START_LOW_BIT: usize = 1;
    pub const OBJ_START_NUM_BITS: usize = 1;
    pub const OBJ_START_MASK: u8 = 0b00000010;
    pub const REF_LOW_BIT: usize = 2;
    pub const REF_NUM_BITS: usize = 6;
    pub const REF_MASK: u8 = 0b11111100;
    pub fn get_SHORT_ENCODE_bit(self) -> bool {
        (((self.load::<u8>() & Self::SHORT_ENCODE_MASK) >> Self::SHORT_ENCODE_LOW_BIT) != 0)
    }
    pub fn set_SHORT_ENCODE_bit(self, val: bool) {
        let old = self.load::<u8>();
        self.store::<u8>(((old & (!Self::SHORT_ENCODE_MASK)) | (((val as u8) << Self::SHORT_ENCODE_LOW_BIT) & Self::SHORT_ENCODE_MASK)));
    }
    pub fn get_OBJ_START_bit(self) -> bool {
        (((self.load::<u8>() & Self::OBJ_START_MASK) >> Self::OBJ_START_LOW_BIT) != 0)
    }
    pub fn set_OBJ_START_bit(self, val: bool) {
        let old = self.load::<u8>();
        self.store::<u8>(((old & (!Self::OBJ_START_MASK)) | (((val as u8) << Self::OBJ_START_LOW_BIT) & Self::OBJ_START_MASK)));
    }
    pub fn get_REF_bits(self) -> u8 {
        ((self.load::<u8>() & Self::REF_MASK) >> Self::REF_LOW_BIT)
    }
    pub fn set_REF_bits(self, val: u8) {
        debug_assert!((val <= 63));
        let old = self.load::<u8>();
        self.store::<u8>(((old & (!Self::REF_MASK)) | (((val as u8) << Self::REF_LOW_BIT) & Self::REF_MASK)));
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MksAddr(usize);
deriveAddr!(MksAddr, MKS_BYTES_ALIGN);
impl MksAddr {
    pub fn get_first_mark_bits(self) -> MarkBitsAddr {
        self.plus::<MarkBitsAddr>(0)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkBitsAddr(usize);
deriveAddr!(MarkBitsAddr, MARK_BITS_BYTES_ALIGN);
impl MarkBitsAddr {
    pub const MARK_LOW_BIT: usize = 0;
    pub const MARK_NUM_BITS: usize = 8;
    pub const MARK_MASK: u8 = 0b11111111;
    pub fn get_MARK_bits(self) -> u8 {
        ((self.load::<u8>() & Self::MARK_MASK) >> Self::MARK_LOW_BIT)
    }
    pub fn set_MARK_bits(self, val: u8) {
        let old = self.load::<u8>();
        self.store::<u8>(((old & (!Self::MARK_MASK)) | (((val as u8) << Self::MARK_LOW_BIT) & Self::MARK_MASK)));
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StkAddr(usize);
deriveAddr!(StkAddr, STK_BYTES_ALIGN);
impl StkAddr {
    pub fn stack(self) -> StackAddr {
        self.plus::<StackAddr>(STACK_OFFSET)
    }
    pub fn from_stack(x: StackAddr) -> Self {
        x.sub::<Self>(STACK_OFFSET)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StackAddr(usize);
deriveAddr!(StackAddr, STACK_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LowWaterAddr(usize);
deriveAddr!(LowWaterAddr, LOW_WATER_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegistersAddr(usize);
deriveAddr!(RegistersAddr, REGISTERS_BYTES_ALIGN);
impl RegistersAddr {
    pub fn regs(self) -> RegsAddr {
        self.plus::<RegsAddr>(REGS_OFFSET)
    }
    pub fn from_regs(x: RegsAddr) -> Self {
        x.sub::<Self>(REGS_OFFSET)
    }
}

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegsAddr(usize);
deriveAddr!(RegsAddr, REGS_BYTES_ALIGN);

#[repr(transparent)]
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegsEndAddr(usize);
deriveAddr!(RegsEndAddr, REGS_END_BYTES_ALIGN);

/// LineMark element for each Line element, both repeated lines times
#[derive(Copy, Clone, Debug)]
pub struct Line2LineMark {
    pub f_base: LineAddr,
    pub t_base: LineMarkAddr,
    pub end: LineMarkAddr,
}
impl Line2LineMark {
    pub fn lookup(self, f_a: LineAddr) -> LineMarkAddr {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 8);
        let loc = self.t_base.plus::<LineMarkAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc
    }
    pub fn set(self, f_a: LineAddr, val: u8) {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 8);
        let loc = self.t_base.plus::<LineMarkAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.store::<u8>(val);
    }
    pub fn get(self, f_a: LineAddr) -> u8 {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 8);
        let loc = self.t_base.plus::<LineMarkAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.load::<u8>()
    }
}

/// RefBits element for each Word element, both repeated wrds times
#[derive(Copy, Clone, Debug)]
pub struct Word2RefBits {
    pub f_base: WordAddr,
    pub t_base: RefBitsAddr,
    pub end: RefBitsAddr,
}
impl Word2RefBits {
    pub fn lookup(self, f_a: WordAddr) -> RefBitsAddr {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 3);
        let loc = self.t_base.plus::<RefBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc
    }
    pub fn set(self, f_a: WordAddr, val: u8) {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 3);
        let loc = self.t_base.plus::<RefBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.store::<u8>(val);
    }
    pub fn get(self, f_a: WordAddr) -> u8 {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 3);
        let loc = self.t_base.plus::<RefBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.load::<u8>()
    }
}

/// MarkBits element for each Word element, both repeated wrds times
#[derive(Copy, Clone, Debug)]
pub struct Word2MarkBits {
    pub f_base: WordAddr,
    pub t_base: MarkBitsAddr,
    pub end: MarkBitsAddr,
}
impl Word2MarkBits {
    pub fn lookup(self, f_a: WordAddr) -> MarkBitsAddr {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 3);
        let loc = self.t_base.plus::<MarkBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc
    }
    pub fn set(self, f_a: WordAddr, val: u8) {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 3);
        let loc = self.t_base.plus::<MarkBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.store::<u8>(val);
    }
    pub fn get(self, f_a: WordAddr) -> u8 {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 3);
        let loc = self.t_base.plus::<MarkBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.load::<u8>()
    }
}

/// MarkBits element for each RefBits element, both repeated wrds times
#[derive(Copy, Clone, Debug)]
pub struct RefBits2MarkBits {
    pub f_base: RefBitsAddr,
    pub t_base: MarkBitsAddr,
    pub end: MarkBitsAddr,
}
impl RefBits2MarkBits {
    pub fn lookup(self, f_a: RefBitsAddr) -> MarkBitsAddr {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 0);
        let loc = self.t_base.plus::<MarkBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc
    }
    pub fn set(self, f_a: RefBitsAddr, val: u8) {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 0);
        let loc = self.t_base.plus::<MarkBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.store::<u8>(val);
    }
    pub fn get(self, f_a: RefBitsAddr) -> u8 {
        debug_assert!((f_a.as_usize() >= self.f_base.as_usize()));
        let idx = ((f_a.as_usize() - self.f_base.as_usize()) >> 0);
        let loc = self.t_base.plus::<MarkBitsAddr>(idx);
        debug_assert!((self.end.as_usize() > loc.as_usize()));
        loc.load::<u8>()
    }
}
