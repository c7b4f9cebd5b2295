#include "udapp/demos.hpp"

namespace udapp::demos {

namespace {

const SizeRange kFieldRange{30, 16, 1000, 400};
const SizeRange kLabelRange{20, 12, 600, 200};

void add_field(Scene& scene, const char* key, RectBounds bounds, ControlRole role = ControlRole::TextField)
{
    SceneElement e;
    e.id = key;
    e.kind = ControlProxy{role, "", key};
    e.params.bounds = bounds;
    e.params.color = {255, 255, 255, 255};
    e.size_range = kFieldRange;
    scene.add_element(std::move(e));
}

void add_comment(Scene& scene, const char* id, const char* text, RectBounds bounds)
{
    SceneElement e;
    e.id = id;
    e.kind = GraphicalPrimitive{ShapeKind::Label, text, std::nullopt};
    e.params.bounds = bounds;
    e.params.color = {60, 60, 90, 255};
    e.size_range = kLabelRange;
    scene.add_element(std::move(e));
}

} // namespace

Scene build_personaldata()
{
    Scene scene;
    auto& record = scene.record();
    record = {
        {"first_name", "Ada"},
        {"last_name", "Lovelace"},
        {"street", "12 St James's Square"},
        {"city", "London"},
        {"zip", "SW1Y 4JH"},
        {"country", "United Kingdom"},
        {"phone_home", "+44 20 7946 0000"},
        {"phone_mobile", "+44 7700 900123"},
        {"company", "Analytical Engines Ltd"},
        {"position", "Analyst"},
        {"notes", "Send a Christmas card"},
        {"email", "ada@example.org"},
        {"birthday", "1815-12-10"},
    };

    add_comment(scene, "lbl_first_name", "First name", {20, 40, 80, 20});
    add_field(scene, "first_name", {105, 40, 160, 22});
    add_comment(scene, "lbl_last_name", "Last name", {20, 68, 80, 20});
    add_field(scene, "last_name", {105, 68, 160, 22});
    scene.create_group("name", "Name", {"lbl_first_name", "first_name", "lbl_last_name", "last_name"});

    // Address fields are independent elements so their order can be changed.
    add_comment(scene, "lbl_street", "Street", {300, 40, 60, 20});
    add_field(scene, "street", {365, 40, 160, 22});
    add_comment(scene, "lbl_city", "City", {300, 68, 60, 20});
    add_field(scene, "city", {365, 68, 160, 22});
    add_field(scene, "zip", {365, 96, 70, 22});
    add_field(scene, "country", {440, 96, 85, 22});
    scene.create_group("address", "Address",
                       {"lbl_street", "street", "lbl_city", "city", "zip", "country"});

    add_comment(scene, "lbl_phone_home", "Home", {20, 130, 80, 20});
    add_field(scene, "phone_home", {105, 130, 160, 22});
    add_comment(scene, "lbl_phone_mobile", "Mobile", {20, 158, 80, 20});
    add_field(scene, "phone_mobile", {105, 158, 160, 22});
    scene.create_group("phones", "Phones",
                       {"lbl_phone_home", "phone_home", "lbl_phone_mobile", "phone_mobile"});

    add_comment(scene, "lbl_company", "Company", {300, 150, 60, 20});
    add_field(scene, "company", {365, 150, 160, 22});
    add_comment(scene, "lbl_position", "Position", {300, 178, 60, 20});
    add_field(scene, "position", {365, 178, 160, 22});
    scene.create_group("employment", "Employment",
                       {"lbl_company", "company", "lbl_position", "position"});

    add_field(scene, "notes", {20, 222, 505, 56}, ControlRole::List);
    scene.create_group("notes_group", "Notes", {"notes"});

    add_comment(scene, "lbl_email", "E-mail", {20, 300, 80, 20});
    add_field(scene, "email", {105, 300, 160, 22});
    add_field(scene, "birthday", {365, 300, 160, 22});

    scene.create_group("personal", "Personal data",
                       {"name", "address", "phones", "employment", "notes_group", "lbl_email",
                        "email", "birthday"});

    scene.snapshot_default();
    return scene;
}

} // namespace udapp::demos
