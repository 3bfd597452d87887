#pragma once

// Generated by tests/oracles/pmv_reference.py (pythermalcomfort pmv_ppd_iso, 7730-2005).

#include <array>

namespace oracle {

struct PmvCase {
    double ta, tr, vel, rh, met, clo, pmv;
};

inline constexpr std::array<PmvCase, 252> kPmvGrid{{
    PmvCase{18.0, 18.0, 0.1, 30.0, 1.0, 0.5, -3.1642201436},
    PmvCase{18.0, 18.0, 0.1, 30.0, 1.0, 1.0, -1.5165053146},
    PmvCase{18.0, 18.0, 0.1, 30.0, 1.2, 0.5, -2.1473511884},
    PmvCase{18.0, 18.0, 0.1, 30.0, 1.2, 1.0, -0.8546799723},
    PmvCase{18.0, 18.0, 0.1, 30.0, 1.6, 0.5, -0.9932233930},
    PmvCase{18.0, 18.0, 0.1, 30.0, 1.6, 1.0, -0.0924095851},
    PmvCase{18.0, 18.0, 0.1, 50.0, 1.0, 0.5, -3.0553421306},
    PmvCase{18.0, 18.0, 0.1, 50.0, 1.0, 1.0, -1.4076273016},
    PmvCase{18.0, 18.0, 0.1, 50.0, 1.2, 0.5, -2.0554723612},
    PmvCase{18.0, 18.0, 0.1, 50.0, 1.2, 1.0, -0.7628011452},
    PmvCase{18.0, 18.0, 0.1, 50.0, 1.6, 0.5, -0.9193980219},
    PmvCase{18.0, 18.0, 0.1, 50.0, 1.6, 1.0, -0.0185842140},
    PmvCase{18.0, 18.0, 0.1, 70.0, 1.0, 0.5, -2.9464641176},
    PmvCase{18.0, 18.0, 0.1, 70.0, 1.0, 1.0, -1.2987492886},
    PmvCase{18.0, 18.0, 0.1, 70.0, 1.2, 0.5, -1.9635935341},
    PmvCase{18.0, 18.0, 0.1, 70.0, 1.2, 1.0, -0.6709223180},
    PmvCase{18.0, 18.0, 0.1, 70.0, 1.6, 0.5, -0.8455726507},
    PmvCase{18.0, 18.0, 0.1, 70.0, 1.6, 1.0, 0.0552411572},
    PmvCase{18.0, 18.0, 0.3, 30.0, 1.0, 0.5, -4.0269069598},
    PmvCase{18.0, 18.0, 0.3, 30.0, 1.0, 1.0, -1.9986191857},
    PmvCase{18.0, 18.0, 0.3, 30.0, 1.2, 0.5, -2.8338961383},
    PmvCase{18.0, 18.0, 0.3, 30.0, 1.2, 1.0, -1.2358517381},
    PmvCase{18.0, 18.0, 0.3, 30.0, 1.6, 0.5, -1.4864461434},
    PmvCase{18.0, 18.0, 0.3, 30.0, 1.6, 1.0, -0.3614788185},
    PmvCase{18.0, 18.0, 0.3, 50.0, 1.0, 0.5, -3.9180289468},
    PmvCase{18.0, 18.0, 0.3, 50.0, 1.0, 1.0, -1.8897411727},
    PmvCase{18.0, 18.0, 0.3, 50.0, 1.2, 0.5, -2.7420173111},
    PmvCase{18.0, 18.0, 0.3, 50.0, 1.2, 1.0, -1.1439729110},
    PmvCase{18.0, 18.0, 0.3, 50.0, 1.6, 0.5, -1.4126207722},
    PmvCase{18.0, 18.0, 0.3, 50.0, 1.6, 1.0, -0.2876534473},
    PmvCase{18.0, 18.0, 0.3, 70.0, 1.0, 0.5, -3.8091509338},
    PmvCase{18.0, 18.0, 0.3, 70.0, 1.0, 1.0, -1.7808631598},
    PmvCase{18.0, 18.0, 0.3, 70.0, 1.2, 0.5, -2.6501384840},
    PmvCase{18.0, 18.0, 0.3, 70.0, 1.2, 1.0, -1.0520940838},
    PmvCase{18.0, 18.0, 0.3, 70.0, 1.6, 0.5, -1.3387954010},
    PmvCase{18.0, 18.0, 0.3, 70.0, 1.6, 1.0, -0.2138280762},
    PmvCase{20.0, 20.0, 0.1, 30.0, 1.0, 0.5, -2.4090907698},
    PmvCase{20.0, 20.0, 0.1, 30.0, 1.0, 1.0, -1.0021135726},
    PmvCase{20.0, 20.0, 0.1, 30.0, 1.2, 0.5, -1.5380467928},
    PmvCase{20.0, 20.0, 0.1, 30.0, 1.2, 1.0, -0.4407135045},
    PmvCase{20.0, 20.0, 0.1, 30.0, 1.6, 0.5, -0.5428163999},
    PmvCase{20.0, 20.0, 0.1, 30.0, 1.6, 1.0, 0.2156266126},
    PmvCase{20.0, 20.0, 0.1, 50.0, 1.0, 0.5, -2.2857234842},
    PmvCase{20.0, 20.0, 0.1, 50.0, 1.0, 1.0, -0.8787462869},
    PmvCase{20.0, 20.0, 0.1, 50.0, 1.2, 0.5, -1.4339409114},
    PmvCase{20.0, 20.0, 0.1, 50.0, 1.2, 1.0, -0.3366076231},
    PmvCase{20.0, 20.0, 0.1, 50.0, 1.6, 0.5, -0.4591664930},
    PmvCase{20.0, 20.0, 0.1, 50.0, 1.6, 1.0, 0.2992765195},
    PmvCase{20.0, 20.0, 0.1, 70.0, 1.0, 0.5, -2.1623561986},
    PmvCase{20.0, 20.0, 0.1, 70.0, 1.0, 1.0, -0.7553790013},
    PmvCase{20.0, 20.0, 0.1, 70.0, 1.2, 0.5, -1.3298350300},
    PmvCase{20.0, 20.0, 0.1, 70.0, 1.2, 1.0, -0.2325017416},
    PmvCase{20.0, 20.0, 0.1, 70.0, 1.6, 0.5, -0.3755165860},
    PmvCase{20.0, 20.0, 0.1, 70.0, 1.6, 1.0, 0.3829264265},
    PmvCase{20.0, 20.0, 0.3, 30.0, 1.0, 0.5, -3.2067298394},
    PmvCase{20.0, 20.0, 0.3, 30.0, 1.0, 1.0, -1.4206194846},
    PmvCase{20.0, 20.0, 0.3, 30.0, 1.2, 0.5, -2.1713057537},
    PmvCase{20.0, 20.0, 0.3, 30.0, 1.2, 1.0, -0.7681608346},
    PmvCase{20.0, 20.0, 0.3, 30.0, 1.6, 0.5, -0.9954304830},
    PmvCase{20.0, 20.0, 0.3, 30.0, 1.6, 1.0, -0.0138014451},
    PmvCase{20.0, 20.0, 0.3, 50.0, 1.0, 0.5, -3.0833625538},
    PmvCase{20.0, 20.0, 0.3, 50.0, 1.0, 1.0, -1.2972521990},
    PmvCase{20.0, 20.0, 0.3, 50.0, 1.2, 0.5, -2.0671998723},
    PmvCase{20.0, 20.0, 0.3, 50.0, 1.2, 1.0, -0.6640549532},
    PmvCase{20.0, 20.0, 0.3, 50.0, 1.6, 0.5, -0.9117805760},
    PmvCase{20.0, 20.0, 0.3, 50.0, 1.6, 1.0, 0.0698484619},
    PmvCase{20.0, 20.0, 0.3, 70.0, 1.0, 0.5, -2.9599952682},
    PmvCase{20.0, 20.0, 0.3, 70.0, 1.0, 1.0, -1.1738849133},
    PmvCase{20.0, 20.0, 0.3, 70.0, 1.2, 0.5, -1.9630939908},
    PmvCase{20.0, 20.0, 0.3, 70.0, 1.2, 1.0, -0.5599490718},
    PmvCase{20.0, 20.0, 0.3, 70.0, 1.6, 0.5, -0.8281306691},
    PmvCase{20.0, 20.0, 0.3, 70.0, 1.6, 1.0, 0.1534983688},
    PmvCase{22.0, 22.0, 0.1, 30.0, 1.0, 0.5, -1.6542063140},
    PmvCase{22.0, 22.0, 0.1, 30.0, 1.0, 1.0, -0.4855476319},
    PmvCase{22.0, 22.0, 0.1, 30.0, 1.2, 0.5, -0.9289632533},
    PmvCase{22.0, 22.0, 0.1, 30.0, 1.2, 1.0, -0.0207024764},
    PmvCase{22.0, 22.0, 0.1, 30.0, 1.6, 0.5, -0.0944696083},
    PmvCase{22.0, 22.0, 0.1, 30.0, 1.6, 1.0, 0.5284463808},
    PmvCase{22.0, 22.0, 0.1, 50.0, 1.0, 0.5, -1.5146931071},
    PmvCase{22.0, 22.0, 0.1, 50.0, 1.0, 1.0, -0.3460344251},
    PmvCase{22.0, 22.0, 0.1, 50.0, 1.2, 0.5, -0.8112323225},
    PmvCase{22.0, 22.0, 0.1, 50.0, 1.2, 1.0, 0.0970284544},
    PmvCase{22.0, 22.0, 0.1, 50.0, 1.6, 0.5, 0.0001281346},
    PmvCase{22.0, 22.0, 0.1, 50.0, 1.6, 1.0, 0.6230441236},
    PmvCase{22.0, 22.0, 0.1, 70.0, 1.0, 0.5, -1.3751799003},
    PmvCase{22.0, 22.0, 0.1, 70.0, 1.0, 1.0, -0.2065212183},
    PmvCase{22.0, 22.0, 0.1, 70.0, 1.2, 0.5, -0.6935013917},
    PmvCase{22.0, 22.0, 0.1, 70.0, 1.2, 1.0, 0.2147593852},
    PmvCase{22.0, 22.0, 0.1, 70.0, 1.6, 0.5, 0.0947258775},
    PmvCase{22.0, 22.0, 0.1, 70.0, 1.6, 1.0, 0.7176418665},
    PmvCase{22.0, 22.0, 0.3, 30.0, 1.0, 0.5, -2.3793941269},
    PmvCase{22.0, 22.0, 0.3, 30.0, 1.0, 1.0, -0.8398266938},
    PmvCase{22.0, 22.0, 0.3, 30.0, 1.2, 0.5, -1.5028567727},
    PmvCase{22.0, 22.0, 0.3, 30.0, 1.2, 1.0, -0.2981304281},
    PmvCase{22.0, 22.0, 0.3, 30.0, 1.6, 0.5, -0.4999628624},
    PmvCase{22.0, 22.0, 0.3, 30.0, 1.6, 1.0, 0.3357311914},
    PmvCase{22.0, 22.0, 0.3, 50.0, 1.0, 0.5, -2.2398809201},
    PmvCase{22.0, 22.0, 0.3, 50.0, 1.0, 1.0, -0.7003134870},
    PmvCase{22.0, 22.0, 0.3, 50.0, 1.2, 0.5, -1.3851258419},
    PmvCase{22.0, 22.0, 0.3, 50.0, 1.2, 1.0, -0.1803994973},
    PmvCase{22.0, 22.0, 0.3, 50.0, 1.6, 0.5, -0.4053651195},
    PmvCase{22.0, 22.0, 0.3, 50.0, 1.6, 1.0, 0.4303289343},
    PmvCase{22.0, 22.0, 0.3, 70.0, 1.0, 0.5, -2.1003677133},
    PmvCase{22.0, 22.0, 0.3, 70.0, 1.0, 1.0, -0.5608002802},
    PmvCase{22.0, 22.0, 0.3, 70.0, 1.2, 0.5, -1.2673949111},
    PmvCase{22.0, 22.0, 0.3, 70.0, 1.2, 1.0, -0.0626685665},
    PmvCase{22.0, 22.0, 0.3, 70.0, 1.6, 0.5, -0.3107673766},
    PmvCase{22.0, 22.0, 0.3, 70.0, 1.6, 1.0, 0.5249266772},
    PmvCase{24.0, 24.0, 0.1, 30.0, 1.0, 0.5, -0.9256766099},
    PmvCase{24.0, 24.0, 0.1, 30.0, 1.0, 1.0, 0.0411204605},
    PmvCase{24.0, 24.0, 0.1, 30.0, 1.2, 0.5, -0.3461868090},
    PmvCase{24.0, 24.0, 0.1, 30.0, 1.2, 1.0, 0.4059415830},
    PmvCase{24.0, 24.0, 0.1, 30.0, 1.6, 0.5, 0.3311956963},
    PmvCase{24.0, 24.0, 0.1, 30.0, 1.6, 1.0, 0.8450662553},
    PmvCase{24.0, 24.0, 0.1, 50.0, 1.0, 0.5, -0.7682037602},
    PmvCase{24.0, 24.0, 0.1, 50.0, 1.0, 1.0, 0.1985933101},
    PmvCase{24.0, 24.0, 0.1, 50.0, 1.2, 0.5, -0.2133002846},
    PmvCase{24.0, 24.0, 0.1, 50.0, 1.2, 1.0, 0.5388281075},
    PmvCase{24.0, 24.0, 0.1, 50.0, 1.6, 0.5, 0.4379710797},
    PmvCase{24.0, 24.0, 0.1, 50.0, 1.6, 1.0, 0.9518416386},
    PmvCase{24.0, 24.0, 0.1, 70.0, 1.0, 0.5, -0.6107309106},
    PmvCase{24.0, 24.0, 0.1, 70.0, 1.0, 1.0, 0.3560661597},
    PmvCase{24.0, 24.0, 0.1, 70.0, 1.2, 0.5, -0.0804137602},
    PmvCase{24.0, 24.0, 0.1, 70.0, 1.2, 1.0, 0.6717146319},
    PmvCase{24.0, 24.0, 0.1, 70.0, 1.6, 0.5, 0.5447464630},
    PmvCase{24.0, 24.0, 0.1, 70.0, 1.6, 1.0, 1.0586170220},
    PmvCase{24.0, 24.0, 0.3, 30.0, 1.0, 0.5, -1.5446150096},
    PmvCase{24.0, 24.0, 0.3, 30.0, 1.0, 1.0, -0.2539128346},
    PmvCase{24.0, 24.0, 0.3, 30.0, 1.2, 0.5, -0.8283107718},
    PmvCase{24.0, 24.0, 0.3, 30.0, 1.2, 1.0, 0.1761277468},
    PmvCase{24.0, 24.0, 0.3, 30.0, 1.6, 0.5, 0.0001456014},
    PmvCase{24.0, 24.0, 0.3, 30.0, 1.6, 1.0, 0.6885295184},
    PmvCase{24.0, 24.0, 0.3, 50.0, 1.0, 0.5, -1.3871421600},
    PmvCase{24.0, 24.0, 0.3, 50.0, 1.0, 1.0, -0.0964399850},
    PmvCase{24.0, 24.0, 0.3, 50.0, 1.2, 0.5, -0.6954242474},
    PmvCase{24.0, 24.0, 0.3, 50.0, 1.2, 1.0, 0.3090142712},
    PmvCase{24.0, 24.0, 0.3, 50.0, 1.6, 0.5, 0.1069209848},
    PmvCase{24.0, 24.0, 0.3, 50.0, 1.6, 1.0, 0.7953049018},
    PmvCase{24.0, 24.0, 0.3, 70.0, 1.0, 0.5, -1.2296693104},
    PmvCase{24.0, 24.0, 0.3, 70.0, 1.0, 1.0, 0.0610328646},
    PmvCase{24.0, 24.0, 0.3, 70.0, 1.2, 0.5, -0.5625377230},
    PmvCase{24.0, 24.0, 0.3, 70.0, 1.2, 1.0, 0.4419007956},
    PmvCase{24.0, 24.0, 0.3, 70.0, 1.6, 0.5, 0.2136963682},
    PmvCase{24.0, 24.0, 0.3, 70.0, 1.6, 1.0, 0.9020802851},
    PmvCase{26.0, 26.0, 0.1, 30.0, 1.0, 0.5, -0.2081970692},
    PmvCase{26.0, 26.0, 0.1, 30.0, 1.0, 1.0, 0.5719793415},
    PmvCase{26.0, 26.0, 0.1, 30.0, 1.2, 0.5, 0.2341214925},
    PmvCase{26.0, 26.0, 0.1, 30.0, 1.2, 1.0, 0.8360619195},
    PmvCase{26.0, 26.0, 0.1, 30.0, 1.6, 0.5, 0.7622371851},
    PmvCase{26.0, 26.0, 0.1, 30.0, 1.6, 1.0, 1.1669135958},
    PmvCase{26.0, 26.0, 0.1, 50.0, 1.0, 0.5, -0.0307821780},
    PmvCase{26.0, 26.0, 0.1, 50.0, 1.0, 1.0, 0.7493942327},
    PmvCase{26.0, 26.0, 0.1, 50.0, 1.2, 0.5, 0.3838364962},
    PmvCase{26.0, 26.0, 0.1, 50.0, 1.2, 1.0, 0.9857769232},
    PmvCase{26.0, 26.0, 0.1, 50.0, 1.6, 0.5, 0.8825343859},
    PmvCase{26.0, 26.0, 0.1, 50.0, 1.6, 1.0, 1.2872107967},
    PmvCase{26.0, 26.0, 0.1, 70.0, 1.0, 0.5, 0.1466327131},
    PmvCase{26.0, 26.0, 0.1, 70.0, 1.0, 1.0, 0.9268091238},
    PmvCase{26.0, 26.0, 0.1, 70.0, 1.2, 0.5, 0.5335514999},
    PmvCase{26.0, 26.0, 0.1, 70.0, 1.2, 1.0, 1.1354919269},
    PmvCase{26.0, 26.0, 0.1, 70.0, 1.6, 0.5, 1.0028315867},
    PmvCase{26.0, 26.0, 0.1, 70.0, 1.6, 1.0, 1.4075079975},
    PmvCase{26.0, 26.0, 0.3, 30.0, 1.0, 0.5, -0.7020905517},
    PmvCase{26.0, 26.0, 0.3, 30.0, 1.0, 1.0, 0.3373924558},
    PmvCase{26.0, 26.0, 0.3, 30.0, 1.2, 0.5, -0.1474148667},
    PmvCase{26.0, 26.0, 0.3, 30.0, 1.2, 1.0, 0.6548411566},
    PmvCase{26.0, 26.0, 0.3, 30.0, 1.6, 0.5, 0.5050954267},
    PmvCase{26.0, 26.0, 0.3, 30.0, 1.6, 1.0, 1.0447753483},
    PmvCase{26.0, 26.0, 0.3, 50.0, 1.0, 0.5, -0.5246756605},
    PmvCase{26.0, 26.0, 0.3, 50.0, 1.0, 1.0, 0.5148073470},
    PmvCase{26.0, 26.0, 0.3, 50.0, 1.2, 0.5, 0.0023001370},
    PmvCase{26.0, 26.0, 0.3, 50.0, 1.2, 1.0, 0.8045561603},
    PmvCase{26.0, 26.0, 0.3, 50.0, 1.6, 0.5, 0.6253926275},
    PmvCase{26.0, 26.0, 0.3, 50.0, 1.6, 1.0, 1.1650725491},
    PmvCase{26.0, 26.0, 0.3, 70.0, 1.0, 0.5, -0.3472607694},
    PmvCase{26.0, 26.0, 0.3, 70.0, 1.0, 1.0, 0.6922222381},
    PmvCase{26.0, 26.0, 0.3, 70.0, 1.2, 0.5, 0.1520151407},
    PmvCase{26.0, 26.0, 0.3, 70.0, 1.2, 1.0, 0.9542711640},
    PmvCase{26.0, 26.0, 0.3, 70.0, 1.6, 0.5, 0.7456898283},
    PmvCase{26.0, 26.0, 0.3, 70.0, 1.6, 1.0, 1.2853697499},
    PmvCase{28.0, 28.0, 0.1, 30.0, 1.0, 0.5, 0.5184192546},
    PmvCase{28.0, 28.0, 0.1, 30.0, 1.0, 1.0, 1.1094507915},
    PmvCase{28.0, 28.0, 0.1, 30.0, 1.2, 0.5, 0.8219204944},
    PmvCase{28.0, 28.0, 0.1, 30.0, 1.2, 1.0, 1.2716308479},
    PmvCase{28.0, 28.0, 0.1, 30.0, 1.6, 0.5, 1.1989888697},
    PmvCase{28.0, 28.0, 0.1, 30.0, 1.6, 1.0, 1.4916932784},
    PmvCase{28.0, 28.0, 0.1, 50.0, 1.0, 0.5, 0.7179394478},
    PmvCase{28.0, 28.0, 0.1, 50.0, 1.0, 1.0, 1.3089709846},
    PmvCase{28.0, 28.0, 0.1, 50.0, 1.2, 0.5, 0.9902894867},
    PmvCase{28.0, 28.0, 0.1, 50.0, 1.2, 1.0, 1.4399998402},
    PmvCase{28.0, 28.0, 0.1, 50.0, 1.6, 0.5, 1.3342746994},
    PmvCase{28.0, 28.0, 0.1, 50.0, 1.6, 1.0, 1.6269791080},
    PmvCase{28.0, 28.0, 0.1, 70.0, 1.0, 0.5, 0.9174596409},
    PmvCase{28.0, 28.0, 0.1, 70.0, 1.0, 1.0, 1.5084911777},
    PmvCase{28.0, 28.0, 0.1, 70.0, 1.2, 0.5, 1.1586584790},
    PmvCase{28.0, 28.0, 0.1, 70.0, 1.2, 1.0, 1.6083688326},
    PmvCase{28.0, 28.0, 0.1, 70.0, 1.6, 0.5, 1.4695605290},
    PmvCase{28.0, 28.0, 0.1, 70.0, 1.6, 1.0, 1.7622649376},
    PmvCase{28.0, 28.0, 0.3, 30.0, 1.0, 0.5, 0.1484991628},
    PmvCase{28.0, 28.0, 0.3, 30.0, 1.0, 1.0, 0.9343773700},
    PmvCase{28.0, 28.0, 0.3, 30.0, 1.2, 0.5, 0.5400990112},
    PmvCase{28.0, 28.0, 0.3, 30.0, 1.2, 1.0, 1.1382523312},
    PmvCase{28.0, 28.0, 0.3, 30.0, 1.6, 0.5, 1.0150993482},
    PmvCase{28.0, 28.0, 0.3, 30.0, 1.6, 1.0, 1.4046626211},
    PmvCase{28.0, 28.0, 0.3, 50.0, 1.0, 0.5, 0.3480193559},
    PmvCase{28.0, 28.0, 0.3, 50.0, 1.0, 1.0, 1.1338975631},
    PmvCase{28.0, 28.0, 0.3, 50.0, 1.2, 0.5, 0.7084680035},
    PmvCase{28.0, 28.0, 0.3, 50.0, 1.2, 1.0, 1.3066213236},
    PmvCase{28.0, 28.0, 0.3, 50.0, 1.6, 0.5, 1.1503851778},
    PmvCase{28.0, 28.0, 0.3, 50.0, 1.6, 1.0, 1.5399484507},
    PmvCase{28.0, 28.0, 0.3, 70.0, 1.0, 0.5, 0.5475395490},
    PmvCase{28.0, 28.0, 0.3, 70.0, 1.0, 1.0, 1.3334177563},
    PmvCase{28.0, 28.0, 0.3, 70.0, 1.2, 0.5, 0.8768369959},
    PmvCase{28.0, 28.0, 0.3, 70.0, 1.2, 1.0, 1.4749903159},
    PmvCase{28.0, 28.0, 0.3, 70.0, 1.6, 0.5, 1.2856710075},
    PmvCase{28.0, 28.0, 0.3, 70.0, 1.6, 1.0, 1.6752342803},
    PmvCase{30.0, 30.0, 0.1, 30.0, 1.0, 0.5, 1.2545799733},
    PmvCase{30.0, 30.0, 0.1, 30.0, 1.0, 1.0, 1.6538429867},
    PmvCase{30.0, 30.0, 0.1, 30.0, 1.2, 0.5, 1.4175392927},
    PmvCase{30.0, 30.0, 0.1, 30.0, 1.2, 1.0, 1.7129077006},
    PmvCase{30.0, 30.0, 0.1, 30.0, 1.6, 0.5, 1.6416953193},
    PmvCase{30.0, 30.0, 0.1, 30.0, 1.6, 1.0, 1.8208739593},
    PmvCase{30.0, 30.0, 0.1, 50.0, 1.0, 0.5, 1.4785623667},
    PmvCase{30.0, 30.0, 0.1, 50.0, 1.0, 1.0, 1.8778253801},
    PmvCase{30.0, 30.0, 0.1, 50.0, 1.2, 0.5, 1.6065511882},
    PmvCase{30.0, 30.0, 0.1, 50.0, 1.2, 1.0, 1.9019195960},
    PmvCase{30.0, 30.0, 0.1, 50.0, 1.6, 0.5, 1.7935678864},
    PmvCase{30.0, 30.0, 0.1, 50.0, 1.6, 1.0, 1.9727465264},
    PmvCase{30.0, 30.0, 0.1, 70.0, 1.0, 0.5, 1.7025447601},
    PmvCase{30.0, 30.0, 0.1, 70.0, 1.0, 1.0, 2.1018077735},
    PmvCase{30.0, 30.0, 0.1, 70.0, 1.2, 0.5, 1.7955630836},
    PmvCase{30.0, 30.0, 0.1, 70.0, 1.2, 1.0, 2.0909314915},
    PmvCase{30.0, 30.0, 0.1, 70.0, 1.6, 0.5, 1.9454404534},
    PmvCase{30.0, 30.0, 0.1, 70.0, 1.6, 1.0, 2.1246190935},
    PmvCase{30.0, 30.0, 0.3, 30.0, 1.0, 0.5, 1.0074929017},
    PmvCase{30.0, 30.0, 0.3, 30.0, 1.0, 1.0, 1.5373488085},
    PmvCase{30.0, 30.0, 0.3, 30.0, 1.2, 0.5, 1.2345148514},
    PmvCase{30.0, 30.0, 0.3, 30.0, 1.2, 1.0, 1.6266196053},
    PmvCase{30.0, 30.0, 0.3, 30.0, 1.6, 0.5, 1.5303829106},
    PmvCase{30.0, 30.0, 0.3, 30.0, 1.6, 1.0, 1.7683980009},
    PmvCase{30.0, 30.0, 0.3, 50.0, 1.0, 0.5, 1.2314752951},
    PmvCase{30.0, 30.0, 0.3, 50.0, 1.0, 1.0, 1.7613312019},
    PmvCase{30.0, 30.0, 0.3, 50.0, 1.2, 0.5, 1.4235267468},
    PmvCase{30.0, 30.0, 0.3, 50.0, 1.2, 1.0, 1.8156315007},
    PmvCase{30.0, 30.0, 0.3, 50.0, 1.6, 0.5, 1.6822554777},
    PmvCase{30.0, 30.0, 0.3, 50.0, 1.6, 1.0, 1.9202705680},
    PmvCase{30.0, 30.0, 0.3, 70.0, 1.0, 0.5, 1.4554576885},
    PmvCase{30.0, 30.0, 0.3, 70.0, 1.0, 1.0, 1.9853135953},
    PmvCase{30.0, 30.0, 0.3, 70.0, 1.2, 0.5, 1.6125386423},
    PmvCase{30.0, 30.0, 0.3, 70.0, 1.2, 1.0, 2.0046433961},
    PmvCase{30.0, 30.0, 0.3, 70.0, 1.6, 0.5, 1.8341280448},
    PmvCase{30.0, 30.0, 0.3, 70.0, 1.6, 1.0, 2.0721431350},
}};

// ta = tr giving PMV = 0 at vel 0.1, rh 50, met 1.2, clo 0.5 (bisection).
inline constexpr double kNeutralTemperature = 24.7178943861;
// ta = tr = 35, vel 0.1, rh 50, met 2.0, clo 1.0.
inline constexpr double kHotPmv = 2.9183042628;

}  // namespace oracle
